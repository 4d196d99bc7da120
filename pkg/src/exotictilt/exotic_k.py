"""Hecke-module model of the equivariant K-group of the Springer resolution.

The K-group is a free Z[v,v^-1]-module with costandard basis {m_lam} indexed
by weights; m_0 is the class of the structure sheaf and the grading shift <1>
acts as multiplication by v.  H acts on the right; on basis vectors, with
u = w_lam * s and mu the translation index of u:

    m_lam . T_s = v^-1 m_lam                       if mu == lam
                = m_mu                             if len(u) = len(w_lam) + 1
                = m_mu + (v^-1 - v) m_lam          otherwise
    m_lam . T_omega = m_mu   (mu the translation index of w_lam * omega)

The first case happens exactly when u is not minimal in its coset (asserted).
Derived classes: nabla: m_lam itself; delta: m_0 acted by the inverse of
T_{w_lam^{-1}}; line bundles: m_0 . theta_lam; Bott-Samelson tilting classes:
m_0 . T_omega (T_{s_r}+v) ... (T_{s_1}+v), the innermost factor acting first.
"""

from __future__ import annotations

from .laurent import LaurentPoly, ONE, VINV, VINV_MINUS_V, V_MINUS_VINV
from .rootdata import RootSystem, Weight
from . import affweyl, heckebraid
from .affweyl import AffineElement, aff_length, aff_mul, simple_generators


class KClass:
    """Finite Z[v,v^-1]-combination of costandard basis classes m_lam."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: p for w, p in (terms or {}).items() if p}

    @classmethod
    def basis(cls, lam: Weight) -> "KClass":
        return cls({tuple(lam): ONE})

    @classmethod
    def zero(cls) -> "KClass":
        return cls()

    def __eq__(self, other):
        return isinstance(other, KClass) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, p in other.terms.items():
            _add_term(out, w, p)
        return KClass(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, p in other.terms.items():
            _add_term(out, w, -p)
        return KClass(out)

    def scale(self, poly) -> "KClass":
        if isinstance(poly, int):
            poly = LaurentPoly({0: poly})
        return KClass({w: p * poly for w, p in self.terms.items()})

    def coefficient(self, lam: Weight) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly.zero())

    def is_nonneg(self) -> bool:
        return all(p.is_nonneg() for p in self.terms.values())

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"KClass({len(self.terms)} terms)"


def _add_term(out, w, p):
    s = out.get(w)
    s = p if s is None else s + p
    if s:
        out[w] = s
    else:
        out.pop(w, None)


def m0(rs: RootSystem) -> KClass:
    return KClass.basis(rs.zero())


# ---------------------------------------------------------------------------
# Basis action


def _basis_gen_action(rs, lam: Weight, gid: int):
    """m_lam . T_gid as a list of (weight, poly)."""
    memo = rs.memo("k_gen_action")
    key = (lam, gid)
    res = memo.get(key)
    if res is not None:
        return res
    w, _ = affweyl.w_lambda(rs, lam)
    u = aff_mul(rs, w, simple_generators(rs)[gid])
    mu = u.t
    if mu == lam:
        # u = (finite simple) * w_lam is not minimal in W t_lam
        if __debug__ and u == affweyl.w_lambda(rs, mu)[0]:
            raise AssertionError("coset-stable step produced a minimal element")
        res = ((lam, VINV),)
    elif aff_length(rs, u) == aff_length(rs, w) + 1:
        if __debug__ and u != affweyl.w_lambda(rs, mu)[0]:
            raise AssertionError("ascent step left the minimal representatives")
        res = ((mu, ONE),)
    else:
        if __debug__ and u != affweyl.w_lambda(rs, mu)[0]:
            raise AssertionError("descent step left the minimal representatives")
        res = ((mu, ONE), (lam, VINV_MINUS_V))
    memo[key] = res
    return res


def act_simple(rs, c: KClass, gid: int) -> KClass:
    """c . T_s, extended linearly from the basis action."""
    out = {}
    for lam, p in c.terms.items():
        for mu, q in _basis_gen_action(rs, lam, gid):
            _add_term(out, mu, p * q)
    return KClass(out)


def act_simple_inv(rs, c: KClass, gid: int) -> KClass:
    """c . T_s^{-1} = c . T_s + (v - v^-1) c."""
    return act_simple(rs, c, gid) + c.scale(V_MINUS_VINV)


def act_omega(rs, c: KClass, omega: AffineElement) -> KClass:
    out = {}
    for lam, p in c.terms.items():
        u = aff_mul(rs, affweyl.w_lambda(rs, lam)[0], omega)
        _add_term(out, u.t, p)
    return KClass(out)


def act_basis(rs, c: KClass, x: AffineElement) -> KClass:
    """c . T_x through a reduced word of x."""
    omega, word = affweyl.reduced_word(rs, x)
    if omega != affweyl.identity(rs):
        c = act_omega(rs, c, omega)
    for gid in word:
        c = act_simple(rs, c, gid)
    return c


def act_basis_inv(rs, c: KClass, x: AffineElement) -> KClass:
    """c . (T_x)^{-1}."""
    omega, word = affweyl.reduced_word(rs, x)
    for gid in reversed(word):
        c = act_simple_inv(rs, c, gid)
    if omega != affweyl.identity(rs):
        c = act_omega(rs, c, affweyl.aff_inv(rs, omega))
    return c


def act_hecke(rs, c: KClass, xi) -> KClass:
    """Right action of a HeckeElement or BraidWord."""
    if isinstance(xi, heckebraid.BraidWord):
        for kind, payload, exp in xi.letters:
            if kind == "s":
                c = (act_simple if exp == 1 else act_simple_inv)(rs, c, payload)
            else:
                om = payload if exp == 1 else affweyl.aff_inv(rs, payload)
                c = act_omega(rs, c, om)
        return c
    out = KClass.zero()
    for x, p in xi.terms.items():
        out = out + act_basis(rs, c, x).scale(p)
    return out


def act_theta(rs, c: KClass, lam: Weight) -> KClass:
    """c . theta_lam via generator sweeps."""
    mu, nu = heckebraid.theta_decomposition(rs, lam)
    c = act_basis(rs, c, affweyl.t_lambda(rs, mu))
    return act_basis_inv(rs, c, affweyl.t_lambda(rs, nu))


# ---------------------------------------------------------------------------
# Named classes


def nabla_class(rs, lam: Weight) -> KClass:
    """[nabla^lam] = m_lam (the basis class by definition)."""
    return KClass.basis(lam)


def delta_class(rs, lam: Weight) -> KClass:
    """[Delta^lam] = m_0 . (T_{w_lam^{-1}})^{-1}."""
    memo = rs.memo("delta_class")
    res = memo.get(lam)
    if res is None:
        w, _ = affweyl.w_lambda(rs, lam)
        res = act_basis_inv(rs, m0(rs), affweyl.aff_inv(rs, w))
        memo[lam] = res
    return res


def line_bundle_class(rs, lam: Weight) -> KClass:
    """[O(lam)] = m_0 . theta_lam."""
    memo = rs.memo("line_bundle")
    res = memo.get(lam)
    if res is None:
        res = act_theta(rs, m0(rs), lam)
        if __debug__:
            if rs.is_dominant(lam) and res != KClass.basis(lam):
                raise AssertionError(f"line bundle anchor failed at {lam}")
            if all(a <= 0 for a in lam):
                dl = delta_class(rs, lam).scale(LaurentPoly.v(rs.delta(lam)))
                if res != dl:
                    raise AssertionError(f"antidominant anchor failed at {lam}")
        memo[lam] = res
    return res


def bott_samelson_class(rs, omega: AffineElement, seq, reverse=False) -> KClass:
    """K-class of the Bott-Samelson object Xi_{s_1} ... Xi_{s_r} I_{T_omega}(O)
    for seq = (s_1, ..., s_r): the innermost factor acts first, so

        m_0 . T_omega (T_{s_r} + v)(T_{s_{r-1}} + v) ... (T_{s_1} + v).

    ``reverse=True`` applies the letters in the opposite order.
    """
    if aff_length(rs, omega) != 0:
        raise ValueError("omega must have length 0")
    c = act_omega(rs, m0(rs), omega)
    letters = list(seq) if reverse else list(reversed(list(seq)))
    for gid in letters:
        c = act_simple(rs, c, gid) + c.scale(LaurentPoly.v(1))
    return c


def tensor_class(rs, weights: dict, c: KClass) -> KClass:
    """c acted by sum_mu dim(V_mu) theta_mu for a G-module weight table."""
    out = KClass.zero()
    for mu, mult in weights.items():
        if mult < 0:
            raise ValueError("weight multiplicities must be nonnegative")
        if mult:
            out = out + act_theta(rs, c, mu).scale(mult)
    return out
