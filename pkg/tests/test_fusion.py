import pytest

from qbf.characters import character_product_decompose
from qbf.fusion import contains_trivial, tensor_decompose
from qbf.root_system import build_root_system


def triangle_violated(ns_nu, ns_lam, ns_mu):
    """Exact check of |nu| > |lam| + |mu| in squared-rational form."""
    s = ns_nu - ns_lam - ns_mu
    return s > 0 and s * s > 4 * ns_lam * ns_mu


class TestTensorDecompose:
    def test_a1_fundamental_square(self):
        rs = build_root_system("A1")
        assert tensor_decompose(rs, (1,), (1,)).components == {(2,): 1, (0,): 1}

    def test_unit(self):
        rs = build_root_system("G2")
        for mu in rs.dominant_weights_up_to(2):
            assert tensor_decompose(rs, (0, 0), mu).components == {mu: 1}

    def test_g2_seven_squared(self):
        rs = build_root_system("G2")
        fd = tensor_decompose(rs, (1, 0), (1, 0))
        assert fd.dimension(rs) == rs.weyl_dim((1, 0)) ** 2
        assert fd.components == character_product_decompose(rs, (1, 0), (1, 0)).components

    def test_b2_spin_square(self):
        rs = build_root_system("B2")
        fd = tensor_decompose(rs, (0, 1), (0, 1))
        # 4 x 4 = 10 + 5 + 1
        assert fd.components == {(0, 2): 1, (1, 0): 1, (0, 0): 1}

    def test_classical_tables(self):
        # anchors from the standard representation tables
        b3 = build_root_system("B3")
        assert tensor_decompose(b3, (0, 0, 1), (0, 0, 1)).components == {
            (0, 0, 2): 1, (0, 1, 0): 1, (1, 0, 0): 1, (0, 0, 0): 1}  # 8x8 = 35+21+7+1
        g2 = build_root_system("G2")
        assert tensor_decompose(g2, (0, 1), (0, 1)).components == {
            (3, 0): 1, (0, 2): 1, (2, 0): 1, (0, 1): 1, (0, 0): 1}  # 14x14, two 77s
        c3 = build_root_system("C3")
        assert tensor_decompose(c3, (1, 0, 0), (1, 0, 0)).components == {
            (2, 0, 0): 1, (0, 1, 0): 1, (0, 0, 0): 1}  # 6x6 = 21+14+1
        d4 = build_root_system("D4")
        assert tensor_decompose(d4, (1, 0, 0, 0), (1, 0, 0, 0)).components == {
            (2, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 0, 0): 1}  # 8x8 = 35+28+1

    @pytest.mark.parametrize("typ,height", [("A1", 4), ("A2", 4), ("B2", 4), ("G2", 4)])
    def test_matches_character_oracle(self, typ, height):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(height)
        for i, lam in enumerate(ws):
            for mu in ws[i:]:
                assert (tensor_decompose(rs, lam, mu).components
                        == character_product_decompose(rs, lam, mu).components)

    @pytest.mark.parametrize("typ", ["A2", "B2", "G2"])
    def test_commutativity(self, typ):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(2)
        for lam in ws:
            for mu in ws:
                assert (tensor_decompose(rs, lam, mu).components
                        == tensor_decompose(rs, mu, lam).components)

    def test_cartan_component(self):
        rs = build_root_system("B3")
        for lam in rs.dominant_weights_up_to(1):
            for mu in rs.dominant_weights_up_to(1):
                top = tuple(a + b for a, b in zip(lam, mu))
                assert tensor_decompose(rs, lam, mu).components[top] == 1

    @pytest.mark.parametrize("typ", ["A2", "B2"])
    def test_conjugation_equivariance(self, typ):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(2)
        for lam in ws:
            for mu in ws:
                fd = tensor_decompose(rs, lam, mu).components
                fdc = tensor_decompose(rs, rs.conjugate_weight(lam),
                                       rs.conjugate_weight(mu)).components
                assert {rs.conjugate_weight(nu): m for nu, m in fd.items()} == fdc

    @pytest.mark.parametrize("typ", ["A2", "B2", "G2"])
    def test_norm_triangle_bound(self, typ):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(2)
        for i, lam in enumerate(ws):
            for mu in ws[i:]:
                for nu, _ in tensor_decompose(rs, lam, mu):
                    assert not triangle_violated(rs.norm_sq(nu), rs.norm_sq(lam), rs.norm_sq(mu))

    @pytest.mark.parametrize("typ", ["A2", "B2", "G2"])
    def test_casimir_inequality_chain(self, typ):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(2)
        for i, lam in enumerate(ws):
            for mu in ws[i:]:
                top = tuple(a + b for a, b in zip(lam, mu))
                cap = rs.casimir(top)
                for nu, _ in tensor_decompose(rs, lam, mu):
                    assert rs.casimir(nu) <= cap

    def test_non_dominant_rejected(self):
        rs = build_root_system("A2")
        with pytest.raises(ValueError, match="dominant"):
            tensor_decompose(rs, (1, -1), (1, 0))

    def test_product_type_factorises(self):
        # fusion on B2xA1 is the product of the factor fusions
        rs = build_root_system("B2xA1")
        b2 = build_root_system("B2")
        a1 = build_root_system("A1")
        lam, mu = (1, 0, 1), (0, 1, 1)
        fd = tensor_decompose(rs, lam, mu)
        expected = {}
        for nu1, m1 in tensor_decompose(b2, (1, 0), (0, 1)):
            for nu2, m2 in tensor_decompose(a1, (1,), (1,)):
                expected[nu1 + nu2] = m1 * m2
        assert fd.components == expected
        assert fd.dimension(rs) == rs.weyl_dim(lam) * rs.weyl_dim(mu)
        assert (character_product_decompose(rs, lam, mu).components == expected)


class TestContainsTrivial:
    def test_examples(self):
        a1 = build_root_system("A1")
        assert contains_trivial(a1, (1,), (1,)) is True
        assert contains_trivial(a1, (0,), (0,)) is True
        a2 = build_root_system("A2")
        assert contains_trivial(a2, (1, 0), (1, 0)) is False
        assert contains_trivial(a2, (1, 0), (0, 1)) is True

    @pytest.mark.parametrize("typ", ["A2", "B2"])
    def test_iff_conjugate(self, typ):
        rs = build_root_system(typ)
        ws = rs.dominant_weights_up_to(2)
        for lam in ws:
            for mu in ws:
                assert contains_trivial(rs, lam, mu) == (mu == rs.conjugate_weight(lam))
