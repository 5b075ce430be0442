"""Module-action tests: every defining relation as a matrix identity."""

import random

import mpmath
import pytest

from qplumb.cyclotomic import brace, make_context, qint, to_complex, zeta_pow
from qplumb.numeric import NumericContext
from qplumb.quantumrep import (
    check_relations,
    pivotal_trace_simple,
    qdim_simple,
    simple_module,
    verma_module,
)


class TestSimpleModule:
    def test_trivial_module(self):
        ctx = make_context(3)
        m = simple_module(ctx, 0)
        assert m.dim == 1
        assert m.E == [[ctx.zero]]
        assert m.F == [[ctx.zero]]
        assert m.K == [[ctx.one]]

    def test_r3_n1_entries(self):
        ctx = make_context(3)
        m = simple_module(ctx, 1)
        q = zeta_pow(ctx, 2)
        assert m.K[0][0] == q and m.K[1][1] == q.inv()
        # E s_1 = [1][1] s_0 = s_0
        assert m.E[0][1] == ctx.one
        assert m.F[1][0] == ctx.one

    def test_out_of_range(self):
        ctx = make_context(3)
        with pytest.raises(ValueError):
            simple_module(ctx, 3)
        with pytest.raises(ValueError):
            simple_module(ctx, -1)

    @pytest.mark.parametrize("r", range(2, 7))
    def test_all_relations_exact(self, r):
        ctx = make_context(r)
        for n in range(r):
            report = check_relations(simple_module(ctx, n))
            assert report.all_ok, (r, n, report.failures)

    def test_commutator_identity_spotcheck(self):
        # (EF - FE) s_i = [n - 2i] s_i, checked against the Cartan side
        ctx = make_context(4)
        m = simple_module(ctx, 2)
        report = check_relations(m)
        names = [c.name for c in report.checks]
        assert "[E,F] = (K-Kinv)/(q-1/q)" in names


class TestVermaModule:
    def test_weights_r2(self):
        nctx = NumericContext(2)
        m = verma_module(nctx, 0.37)
        assert abs(complex(m.H[0][0]) - (0.37 + 1)) < 1e-12
        assert abs(complex(m.H[1][1]) - (0.37 - 1)) < 1e-12

    def test_e_action_r2(self):
        nctx = NumericContext(2)
        alpha = 0.8 + 0.1j
        m = verma_module(nctx, alpha)
        # E v_1 = [1][1 - alpha] v_0 = {1-alpha}/{1} v_0
        import cmath, math

        def br(z):
            return cmath.exp(1j * math.pi * z / 2) - cmath.exp(-1j * math.pi * z / 2)

        expect = br(1 - alpha) / br(1)
        assert abs(complex(m.E[0][1]) - expect) < 1e-12

    def test_k_is_q_to_h(self):
        nctx = NumericContext(5)
        m = verma_module(nctx, 1.23 - 0.4j)
        report = check_relations(m)
        weight = [c for c in report.checks if c.name == "K = q^H"]
        assert weight and weight[0].ok

    @pytest.mark.parametrize("r", range(2, 7))
    def test_relations_random_alpha(self, r):
        rng = random.Random(1000 + r)
        nctx = NumericContext(r)
        for _ in range(50):
            alpha = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
            report = check_relations(verma_module(nctx, alpha), tol=1e-10)
            assert report.all_ok, (r, alpha, report.failures, report.max_deviation)

    def test_corrupted_module_fails_named_relation(self):
        nctx = NumericContext(3)
        m = verma_module(nctx, 0.77)
        m.E[0][1] = m.E[0][1] + mpmath.mpc(0.001)
        report = check_relations(m)
        assert not report.all_ok
        assert "[E,F] = (K-Kinv)/(q-1/q)" in report.failures

    def test_corrupted_exact_module_fails(self):
        ctx = make_context(3)
        m = simple_module(ctx, 2)
        m.K[0][0] = m.K[0][0] + ctx.one
        report = check_relations(m)
        assert not report.all_ok
        assert any("K" in name for name in report.failures)


class TestMatrixShape:
    @pytest.mark.parametrize("kind", ["simple", "verma"])
    def test_support_structure(self, kind):
        # E lives on the superdiagonal, F on the subdiagonal, K/H are diagonal
        if kind == "simple":
            m = simple_module(make_context(5), 3)
        else:
            m = verma_module(NumericContext(5), 0.61 - 0.2j)
        for i in range(m.dim):
            for j in range(m.dim):
                if j != i + 1:
                    assert _is_zero_entry(m.E[i][j]), ("E", i, j)
                if j != i - 1:
                    assert _is_zero_entry(m.F[i][j]), ("F", i, j)
                if i != j:
                    assert _is_zero_entry(m.K[i][j]) and _is_zero_entry(m.Kinv[i][j])
                    if m.H is not None:
                        assert _is_zero_entry(m.H[i][j])

    def test_dimensions(self):
        assert simple_module(make_context(4), 2).dim == 3
        assert verma_module(NumericContext(4), 1.5j).dim == 4


def _is_zero_entry(x):
    if hasattr(x, "is_zero"):
        return x.is_zero
    return x == 0


class TestQdimSimple:
    def test_n0(self):
        ctx = make_context(4)
        assert qdim_simple(ctx, 0) == ctx.one

    @pytest.mark.parametrize("r", range(2, 8))
    def test_top_color_vanishes(self, r):
        assert qdim_simple(make_context(r), r - 1).is_zero

    @pytest.mark.parametrize("r", range(2, 7))
    def test_inverse_form(self, r):
        # 1/qdim(S_{r-1-x}) = (-1)^{r-1-x} {1}/{r-x}; also {r-x} = {x}
        ctx = make_context(r)
        for x in range(1, r):
            n = r - 1 - x
            lhs = qdim_simple(ctx, n).inv()
            rhs = brace(ctx, 1) / brace(ctx, r - x)
            if n % 2:
                rhs = -rhs
            assert lhs == rhs
            assert brace(ctx, r - x) == brace(ctx, x)

    @pytest.mark.parametrize("r", range(2, 7))
    def test_matches_pivotal_trace(self, r):
        ctx = make_context(r)
        for n in range(r):
            assert qdim_simple(ctx, n) == pivotal_trace_simple(ctx, n)
            lhs = complex(to_complex(qdim_simple(ctx, n)))
            rhs = complex(to_complex(pivotal_trace_simple(ctx, n)))
            assert abs(lhs - rhs) < 1e-10

    def test_value_is_signed_qint(self):
        ctx = make_context(5)
        assert qdim_simple(ctx, 2) == qint(ctx, 3)
        assert qdim_simple(ctx, 1) == -qint(ctx, 2)
