"""
The Iwahori-Hecke algebra of an extended affine Weyl group with parameters.

Coefficients live in ``Z[v, v^-1]`` with ``q_s = v^(2 L(s))``.  Products of
basis elements use only the quadratic relation, length additivity and the
twist by length-zero elements:

    T_s T_w = T_{sw}                              if l(sw) > l(w)
    T_s T_w = (q_s - 1) T_w + q_s T_{sw}          otherwise
    T_tau T_w = T_{tau w}                         for l(tau) = 0

On top of this the module builds the Bernstein elements ``Theta_lam``, the
Bernstein basis ``{Theta_lam T_w}``, the orbit sums spanning the center and
the map to the algebra of the torsion-free quotient.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .affine import AffineWall, ExtElt, ExtendedWeylGroup, ParamSys
from .errors import ContextMismatch, NotCentral, ResidueNonzero, WindowExceeded
from .laurent import LaurentInt

__all__ = ["HeckeAlgebra", "HeckeElt", "BernsteinElt"]

ONE = LaurentInt.constant(1)
ZERO = LaurentInt.constant(0)


def _accumulate(target: dict, key, coeff: LaurentInt) -> None:
    cur = target.get(key)
    if cur is None:
        target[key] = coeff
    else:
        s = cur + coeff
        if s.is_zero():
            del target[key]
        else:
            target[key] = s


class HeckeElt:
    """A finite combination ``sum c_w T_w`` with Laurent polynomial coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "HeckeAlgebra", terms: dict | None = None):
        self.alg = alg
        self.terms: dict[ExtElt, LaurentInt] = {}
        if terms:
            for w, c in terms.items():
                c = LaurentInt.coerce(c)
                if not c.is_zero():
                    _accumulate(self.terms, w, c)

    @classmethod
    def _wrap(cls, alg, terms: dict) -> "HeckeElt":
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.terms = terms
        return obj

    def _check(self, other: "HeckeElt") -> None:
        if other.alg is not self.alg:
            raise ContextMismatch(f"elements of {self.alg.name!r} and {other.alg.name!r} cannot be combined")

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return HeckeElt._wrap(self.alg, out)

    def __neg__(self):
        return HeckeElt._wrap(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        c = LaurentInt.coerce(c)
        if c.is_zero():
            return HeckeElt._wrap(self.alg, {})
        return HeckeElt._wrap(self.alg, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.alg.t_mul(self, other)
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: ExtElt) -> LaurentInt:
        return self.terms.get(w, ZERO)

    def support(self) -> list[ExtElt]:
        return sorted(self.terms, key=self.alg.group.sort_key)

    def specialize(self, value=1) -> dict:
        """Coefficients evaluated at ``v = value``; zero entries dropped."""
        out = {}
        for w, c in self.terms.items():
            x = c.evaluate(value)
            if x:
                out[w] = x
        return out

    def render(self, normalized: bool = False) -> str:
        return self.alg.render(self, normalized)

    def __repr__(self):
        return self.render()


@dataclass
class BernsteinElt:
    """Coefficients ``c[(lam, u)]`` of ``sum c Theta_lam T_u`` with ``u`` a finite Weyl index."""

    alg: "HeckeAlgebra"
    coeffs: dict

    def __eq__(self, other):
        return isinstance(other, BernsteinElt) and other.alg is self.alg and other.coeffs == self.coeffs

    def render(self) -> str:
        return self.alg.render_bernstein(self)


class HeckeAlgebra:
    """The algebra context: group, parameters and memoized basis products.

    Caches are filled on demand; writes take a lock so one context may be
    shared between threads.
    """

    def __init__(self, group: ExtendedWeylGroup, params: ParamSys, name: str = "", quotient=None):
        self.group = group
        self.params = params
        self.name = name
        report = group.validate_params(params)
        if not report.ok:
            raise ValueError(f"invalid parameters: {report.violations}")
        self.qexp = [2 * params[lab] for lab in group.labels]
        self.q = [LaurentInt.monomial(e) for e in self.qexp]
        self.qm1 = [LaurentInt({e: 1, 0: -1}) for e in self.qexp]
        self.qinv = [LaurentInt.monomial(-e) for e in self.qexp]
        self.qinvm1 = [LaurentInt({-e: 1, 0: -1}) for e in self.qexp]
        self._lock = threading.RLock()
        self._left: dict = {}
        self._right: dict = {}
        self._right_inv: dict = {}
        self._prod: dict = {}
        self._theta: dict = {}
        self._bern: dict = {}
        self._weight: dict = {}
        self._quotient = quotient

    @classmethod
    def from_config(cls, cfg) -> "HeckeAlgebra":
        group = cfg.validate()
        quotient = None
        if cfg.torsion_orders:
            quotient = cfg.quotient()
        return cls(group, cfg.params(), cfg.name, quotient)

    # ------------------------------------------------------------------
    # basic constructors

    def zero(self) -> HeckeElt:
        return HeckeElt._wrap(self, {})

    def one(self) -> HeckeElt:
        return self.T(self.group.identity)

    def T(self, w: ExtElt, coeff=1) -> HeckeElt:
        return HeckeElt(self, {w: coeff})

    def T_gen(self, label: str) -> HeckeElt:
        return self.T(self.group.gens[self.group.label_index[label]])

    def weight(self, w: ExtElt) -> int:
        """``L(w)``: sum of parameters along a reduced word."""
        r = self._weight.get(w)
        if r is None:
            r = self.group.normalized_weight(w, self.params)
            with self._lock:
                self._weight[w] = r
        return r

    def normalized(self, w: ExtElt) -> HeckeElt:
        """``T~_w = v^(-L(w)) T_w``."""
        return self.T(w, LaurentInt.monomial(-self.weight(w)))

    # ------------------------------------------------------------------
    # Iwahori-Matsumoto arithmetic

    def _left_gen_basis(self, s: int, y: ExtElt):
        key = (s, y)
        r = self._left.get(key)
        if r is None:
            G = self.group
            sy = G.mul(G.gens[s], y)
            if G.length(sy) > G.length(y):
                r = ((sy, ONE),)
            else:
                r = ((y, self.qm1[s]), (sy, self.q[s]))
            with self._lock:
                self._left[key] = r
        return r

    def _right_gen_basis(self, y: ExtElt, s: int):
        key = (y, s)
        r = self._right.get(key)
        if r is None:
            G = self.group
            ys = G.mul(y, G.gens[s])
            if G.length(ys) > G.length(y):
                r = ((ys, ONE),)
            else:
                r = ((y, self.qm1[s]), (ys, self.q[s]))
            with self._lock:
                self._right[key] = r
        return r

    def _right_gen_inv_basis(self, y: ExtElt, s: int):
        # T_s^-1 = q^-1 T_s + (q^-1 - 1) T_1
        key = (y, s)
        r = self._right_inv.get(key)
        if r is None:
            G = self.group
            ys = G.mul(y, G.gens[s])
            if G.length(ys) < G.length(y):
                r = ((ys, ONE),)
            else:
                r = ((ys, self.qinv[s]), (y, self.qinvm1[s]))
            with self._lock:
                self._right_inv[key] = r
        return r

    def _apply(self, terms: dict, fn) -> dict:
        out: dict = {}
        for y, c in terms.items():
            for z, d in fn(y):
                _accumulate(out, z, c * d if d is not ONE else c)
        return out

    def left_mul_gen(self, s: int, h: HeckeElt) -> HeckeElt:
        return HeckeElt._wrap(self, self._apply(h.terms, lambda y: self._left_gen_basis(s, y)))

    def right_mul_gen(self, h: HeckeElt, s: int) -> HeckeElt:
        return HeckeElt._wrap(self, self._apply(h.terms, lambda y: self._right_gen_basis(y, s)))

    def right_mul_gen_inv(self, h: HeckeElt, s: int) -> HeckeElt:
        return HeckeElt._wrap(self, self._apply(h.terms, lambda y: self._right_gen_inv_basis(y, s)))

    def basis_product(self, x: ExtElt, y: ExtElt, cache: bool = True) -> dict:
        """``T_x T_y`` as a term dictionary (memoized unless ``cache`` is False)."""
        key = (x, y)
        r = self._prod.get(key)
        if r is not None:
            return r
        G = self.group
        word, tau = G.gallery_walk(x)
        terms = {G.mul(tau, y): ONE}
        for s in reversed(word):
            terms = self._apply(terms, lambda z, s=s: self._left_gen_basis(s, z))
        if cache and len(self._prod) < 200000:
            with self._lock:
                self._prod[key] = terms
        return terms

    def t_mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        if a.alg is not self or b.alg is not self:
            raise ContextMismatch("t_mul operands belong to a different algebra")
        out: dict = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                c = cx * cy
                for z, d in self.basis_product(x, y).items():
                    _accumulate(out, z, c * d)
        return HeckeElt._wrap(self, out)

    def mul_word(self, word) -> HeckeElt:
        """``T_{s_1} ... T_{s_m}`` for generator indices (not necessarily reduced)."""
        h = self.one()
        for s in reversed(word):
            h = self.left_mul_gen(s, h)
        return h

    def t_inverse(self, w: ExtElt) -> HeckeElt:
        """``T_w^-1`` from ``T_s^-1 = q^-1 T_s + (q^-1 - 1)`` and ``T_tau^-1 = T_{tau^-1}``."""
        G = self.group
        word, tau = G.gallery_walk(w)
        h = self.T(G.inverse(tau))
        for s in reversed(word):
            h = self.right_mul_gen_inv(h, s)
        return h

    # ------------------------------------------------------------------
    # Bernstein elements

    def theta(self, lam, decomposition=None) -> HeckeElt:
        """``Theta_lam = T~_{lam1} T~_{lam2}^-1`` for a dominant decomposition ``lam = lam1 - lam2``."""
        G = self.group
        lam = G.lattice.canon(lam)
        if decomposition is None:
            hit = self._theta.get(lam)
            if hit is not None:
                return hit
            lam1, lam2 = G.small_dominant_decompose(lam)
        else:
            lam1, lam2 = (G.lattice.canon(x) for x in decomposition)
            if G.lattice.sub(lam1, lam2) != lam or not (G.is_dominant(lam1) and G.is_dominant(lam2)):
                raise ValueError("not a dominant decomposition of lam")
        t1, t2 = G.translation(lam1), G.translation(lam2)
        word2, tau2 = G.gallery_walk(t2)
        h = self.T(G.mul(t1, G.inverse(tau2)), LaurentInt.monomial(self.weight(t2) - self.weight(t1)))
        for s in reversed(word2):
            h = self.right_mul_gen_inv(h, s)
        if decomposition is None:
            with self._lock:
                self._theta[lam] = h
        return h

    def theta_additivity_check(self, lam, mu) -> bool:
        G = self.group
        return self.t_mul(self.theta(lam), self.theta(mu)) == self.theta(G.lattice.add(G.lattice.canon(lam), G.lattice.canon(mu)))

    def simple_root_index(self, s: int) -> int:
        if not 0 <= s < self.group.rank:
            raise ValueError("commutation relations are stated for finite simple reflections")
        return self.group.rs.simple_indices[s]

    def tilde_weight(self, s: int) -> int:
        """``L(s~)``: the parameter of the wall ``<alpha_s, x> = 1``."""
        return self.group.wall_parameter(AffineWall(self.simple_root_index(s), 1), self.params)

    def commutation_coefficients(self, s: int) -> tuple[LaurentInt, LaurentInt]:
        Ls = self.params[self.group.labels[s]]
        Lt = self.tilde_weight(s)
        c0 = LaurentInt({2 * Ls: 1, 0: -1})
        c1 = LaurentInt({Ls + Lt: 1}) - LaurentInt({Ls - Lt: 1})
        return c0, c1

    def commutation_terms(self, s: int, lam) -> list[tuple[tuple, LaurentInt]]:
        """``[(lam - j alpha^vee, coefficient)]`` making up the right-hand side."""
        G = self.group
        lam = G.lattice.canon(lam)
        a = self.simple_root_index(s)
        N = G.pairing(a, lam)
        c0, c1 = self.commutation_coefficients(s)
        cor = G.coroots[a]
        if N >= 0:
            js, sign = range(0, N), 1
        else:
            js, sign = range(N, 0), -1
        out = []
        for j in js:
            c = c0 if j % 2 == 0 else c1
            out.append((G.lattice.sub(lam, G.lattice.scale(j, cor)), c if sign > 0 else -c))
        return out

    def commutation_rhs(self, s: int, lam) -> HeckeElt:
        h = self.zero()
        for mu, c in self.commutation_terms(s, lam):
            if not c.is_zero():
                h = h + self.theta(mu).scale(c)
        return h

    def commutation_lhs(self, s: int, lam) -> HeckeElt:
        G = self.group
        lam = G.lattice.canon(lam)
        slam = G.act(G.W.simple[s], lam)
        return self.left_mul_gen(s, self.theta(lam)) - self.right_mul_gen(self.theta(slam), s)

    def commutation_check(self, s: int, lam) -> bool:
        return self.commutation_lhs(s, lam) == self.commutation_rhs(s, lam)

    # ------------------------------------------------------------------
    # Bernstein basis

    def _finite_left(self, s: int, u: int):
        """``T_s T_u`` inside the finite Hecke algebra, as ``[(u', coeff)]``."""
        W = self.group.W
        su = W.mul(W.simple[s], u)
        if W.lengths[su] > W.lengths[u]:
            return [(su, ONE)]
        return [(u, self.qm1[s]), (su, self.q[s])]

    def _finite_right(self, u: int, s: int):
        W = self.group.W
        us = W.mul(u, W.simple[s])
        if W.lengths[us] > W.lengths[u]:
            return [(us, ONE)]
        return [(u, self.qm1[s]), (us, self.q[s])]

    def bern_left_mul_gen(self, s: int, coeffs: dict) -> dict:
        """``T_s * sum c Theta_nu T_u`` rewritten in the Bernstein basis."""
        G = self.group
        out: dict = {}
        for (nu, u), c in coeffs.items():
            snu = G.act(G.W.simple[s], nu)
            for u2, d in self._finite_left(s, u):
                _accumulate(out, (snu, u2), c * d)
            for mu, d in self.commutation_terms(s, nu):
                if not d.is_zero():
                    _accumulate(out, (mu, u), c * d)
        return out

    def bern_right_mul_finite(self, coeffs: dict, v: int) -> dict:
        word = self.group.W.words[v]
        out = coeffs
        for s in word:
            nxt: dict = {}
            for (nu, u), c in out.items():
                for u2, d in self._finite_right(u, s):
                    _accumulate(nxt, (nu, u2), c * d)
            out = nxt
        return out

    def _minimal_dominating(self, mu) -> tuple[int, tuple]:
        """Shortest ``u`` in W with ``u^-1(mu)`` dominant, and that dominant element."""
        G = self.group
        W = G.W
        for u in range(len(W)):  # indices are sorted by length
            lam = G.act(W.inverse[u], mu)
            if G.is_dominant(lam):
                return u, lam
        raise AssertionError("every W-orbit meets the dominant chamber")

    def _basis_to_bernstein(self, x: ExtElt, depth: int = 0) -> dict:
        hit = self._bern.get(x)
        if hit is not None:
            return hit
        if depth > 64:
            raise WindowExceeded(f"Bernstein expansion of {self.group.render(x)} recursed too deeply")
        G = self.group
        W = G.W
        mu = x.lam
        u1, lam = self._minimal_dominating(mu)
        v = W.mul(W.inverse[u1], x.u)
        # T_{u1} T_{t_lam} = T_{u1 t_lam} by length additivity, and T_{t_lam} = v^L Theta_lam
        bern = {(lam, 0): LaurentInt.monomial(self.weight(G.translation(lam)))}
        for s in reversed(W.words[u1]):
            bern = self.bern_left_mul_gen(s, bern)
        bern = self.bern_right_mul_finite(bern, v)
        # T_{u1 t_lam} T_v = c T_x + (terms T_{(mu, u1 v')} with l(v') < l(v))
        y = G.mul(G.finite(u1), G.translation(lam))
        prod = self.basis_product(y, G.finite(v))
        lead = prod.get(x)
        if lead is None or not lead.is_unit():
            raise WindowExceeded(f"leading coefficient at {G.render(x)} is not a unit: {lead}")
        out = dict(bern)
        for z, c in prod.items():
            if z == x:
                continue
            sub = self._basis_to_bernstein(z, depth + 1)
            for key, d in sub.items():
                _accumulate(out, key, -(c * d))
        inv = lead.inverse()
        out = {k: c * inv for k, c in out.items()}
        if len(out) > 100000:
            raise WindowExceeded(f"Bernstein expansion of {G.render(x)} exceeds 100000 terms")
        with self._lock:
            self._bern[x] = out
        return out

    def to_bernstein(self, h: HeckeElt) -> BernsteinElt:
        if h.alg is not self:
            raise ContextMismatch("element belongs to a different algebra")
        out: dict = {}
        for x, c in h.terms.items():
            for key, d in self._basis_to_bernstein(x).items():
                _accumulate(out, key, c * d)
        return BernsteinElt(self, out)

    def from_bernstein(self, b) -> HeckeElt:
        coeffs = b.coeffs if isinstance(b, BernsteinElt) else b
        G = self.group
        out = self.zero()
        for (lam, u), c in coeffs.items():
            c = LaurentInt.coerce(c)
            term = self.t_mul(self.theta(lam), self.T(G.finite(u)))
            out = out + term.scale(c)
        return out

    # ------------------------------------------------------------------
    # center

    def central_element(self, orbit) -> HeckeElt:
        h = self.zero()
        for lam in orbit:
            h = h + self.theta(lam)
        return h

    def generator_elements(self) -> list[tuple[str, HeckeElt]]:
        G = self.group
        gens = [(lab, self.T(g)) for lab, g in zip(G.labels, G.gens)]
        for tau in G.omega_generators():
            gens.append((G.render_omega(tau), self.T(tau)))
        return gens

    def commutator(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        return self.t_mul(a, b) - self.t_mul(b, a)

    def central_witness(self, h: HeckeElt):
        """First generator not commuting with ``h`` and the commutator, or None."""
        for label, g in self.generator_elements():
            c = self.commutator(g, h)
            if not c.is_zero():
                return label, c
        return None

    def center_decompose(self, h: HeckeElt, max_steps: int = 10000) -> dict:
        """``{orbit: c}`` with ``h = sum c z_orbit``; raises NotCentral / ResidueNonzero."""
        witness = self.central_witness(h)
        if witness is not None:
            raise NotCentral(*witness)
        G = self.group
        rest = h
        out: dict = {}
        for _ in range(max_steps):
            if rest.is_zero():
                return out
            cands = [w for w in rest.terms if w.u == 0 and G.is_dominant(w.lam)]
            if not cands:
                raise ResidueNonzero(rest)
            mu = max(cands, key=lambda w: (G.length(w), w.lam)).lam
            t = G.translation(mu)
            c = rest.terms[t].shift(self.weight(t))
            orbit = G.weyl_orbit(mu)
            out[orbit] = out.get(orbit, ZERO) + c
            rest = rest - self.central_element(orbit).scale(c)
        raise ResidueNonzero(rest)

    # ------------------------------------------------------------------
    # torsion-free quotient

    def quotient_algebra(self) -> "HeckeAlgebra":
        """The algebra of the same data with torsion dropped (itself if torsion-free)."""
        if not self.group.lattice.torsion_orders:
            return self
        q = self._quotient
        if q is None:
            raise ContextMismatch("no torsion-free quotient data attached to this algebra")
        if not isinstance(q, HeckeAlgebra):
            q = HeckeAlgebra.from_config(q)
            self._quotient = q
        return q

    def iota(self, w: ExtElt) -> ExtElt:
        n = self.group.lattice.free_rank
        return ExtElt(tuple(w.lam[:n]), w.u)

    def iota_H(self, h: HeckeElt) -> HeckeElt:
        if h.alg is not self:
            raise ContextMismatch("element belongs to a different algebra")
        Q = self.quotient_algebra()
        if Q is self:
            return h
        out: dict = {}
        for w, c in h.terms.items():
            _accumulate(out, self.iota(w), c)
        return HeckeElt._wrap(Q, out)

    # ------------------------------------------------------------------
    # rendering

    def _coeff_str(self, c: LaurentInt) -> str:
        if c == 1:
            return ""
        if c == -1:
            return "-"
        s = repr(c)
        if c.is_compound():
            return f"({s})*"
        return s + "*"

    def render(self, h: HeckeElt, normalized: bool = False) -> str:
        if h.is_zero():
            return "0"
        G = self.group
        sym = "T~" if normalized else "T"
        parts = []
        for w in h.support():
            c = h.terms[w]
            if normalized:
                c = c.shift(self.weight(w))
            parts.append(f"{self._coeff_str(c)}{sym}[{G.render(w)}]")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def render_bernstein(self, b: BernsteinElt) -> str:
        if not b.coeffs:
            return "0"
        G = self.group

        def key(item):
            (lam, u), _ = item
            return (G.length(G.translation(lam)), lam, G.W.lengths[u], G.W.words[u])

        parts = []
        for (lam, u), c in sorted(b.coeffs.items(), key=key):
            word = ".".join(G.labels[s] for s in G.W.words[u]) or "1"
            parts.append(f"{self._coeff_str(c)}Theta[{G.render_translation(lam)}]*T[{word}]")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out
