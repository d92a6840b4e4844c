"""
The extended affine Weyl group ``Lambda x| W`` and its alcove geometry.

``Lambda = Z^n (+) Z/d_1 (+) ... (+) Z/d_k``.  An element ``(lam, u)`` acts on
the apartment ``V = R^n`` by ``x -> lam_free + u(x)``; the torsion part acts
trivially.  Products follow ``(l1, u1)(l2, u2) = (l1 + u1(l2), u1 u2)``.

Two independent length computations are provided: the closed formula over
positive roots (:meth:`ExtendedWeylGroup.length`) and the geometric gallery
walk (:meth:`ExtendedWeylGroup.gallery_walk`) that peels simple affine
reflections off the left until the base alcove is stabilized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .errors import BoundExceeded, NotATranslationRequired, NotFound, ValidationFailed
from .roots import RootSystem, WeylGroup, build_root_system, dot, solve_rational

__all__ = [
    "TranslationGroup", "ExtElt", "AffineWall", "ParamSys", "ExtendedWeylGroup",
]


class ExtElt(NamedTuple):
    """``t_lam * u``: a translation (free + torsion coordinates) and a Weyl index."""

    lam: tuple
    u: int


@dataclass(frozen=True)
class TranslationGroup:
    free_rank: int
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if any(d < 2 for d in self.torsion_orders):
            raise ValidationFailed(f"torsion orders must be >= 2, got {list(self.torsion_orders)}")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    def canon(self, lam) -> tuple:
        n = self.free_rank
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(lam)}")
        return lam[:n] + tuple(t % d for t, d in zip(lam[n:], self.torsion_orders))

    def zero(self) -> tuple:
        return (0,) * self.dim

    def add(self, a, b) -> tuple:
        n = self.free_rank
        s = tuple(x + y for x, y in zip(a, b))
        return s[:n] + tuple(t % d for t, d in zip(s[n:], self.torsion_orders))

    def neg(self, a) -> tuple:
        n = self.free_rank
        return tuple(-x for x in a[:n]) + tuple((-t) % d for t, d in zip(a[n:], self.torsion_orders))

    def sub(self, a, b) -> tuple:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a) -> tuple:
        n = self.free_rank
        return tuple(k * x for x in a[:n]) + tuple((k * t) % d for t, d in zip(a[n:], self.torsion_orders))

    def free(self, a) -> tuple:
        return a[: self.free_rank]

    def torsion(self, a) -> tuple:
        return a[self.free_rank:]

    def basis(self) -> list[tuple]:
        out = []
        for j in range(self.dim):
            e = [0] * self.dim
            e[j] = 1
            out.append(tuple(e))
        return out

    def torsion_elements(self) -> list[tuple]:
        out = [()]
        for d in self.torsion_orders:
            out = [t + (k,) for t in out for k in range(d)]
        return out


class AffineWall(NamedTuple):
    """The hyperplane ``<root, x> = level``, canonicalized so the root is positive."""

    root: int
    level: int


@dataclass
class ParamSys:
    """Exponential parameters ``L(s)`` on the simple affine reflections."""

    weight: dict[str, int]

    def __getitem__(self, label: str) -> int:
        return self.weight[label]


@dataclass
class ParamReport:
    violations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class ExtendedWeylGroup:
    """``Lambda x| W`` for a root system and a coroot embedding into ``Lambda``.

    ``simple_coroots`` lists, for each simple root, the coroot as a full
    element of ``Lambda`` (free coordinates then torsion coordinates).
    """

    def __init__(self, rs: RootSystem, lattice: TranslationGroup, simple_coroots):
        self.rs = rs
        self.lattice = lattice
        n = lattice.free_rank
        if rs.ambient_rank != n:
            raise ValidationFailed(f"root system lives on Z^{rs.ambient_rank}, lattice free rank is {n}")
        cor = [lattice.canon(c) for c in simple_coroots]
        if len(cor) != rs.rank:
            raise ValidationFailed("one coroot per simple root is required")
        for k, c in enumerate(cor):
            if tuple(c[:n]) != tuple(rs.simple_coroots[k]):
                raise ValidationFailed(f"free part of coroot {k + 1} disagrees with the root system")
        self.simple_coroots = cor
        self.W = WeylGroup(rs)
        W = self.W
        self._act_cache: dict = {}
        self._torsion_mats = self._build_torsion_matrices()
        self._check_braids()
        self.coroots = self._all_coroots()
        self.rank = rs.rank
        self.ncomp = len(rs.components)

        # simple affine reflections: finite simple ones first, then one per component
        self.gens: list[ExtElt] = [ExtElt(lattice.zero(), W.simple[i]) for i in range(rs.rank)]
        self.labels: list[str] = [f"s{i + 1}" for i in range(rs.rank)]
        for c, th in enumerate(rs.highest_roots):
            self.gens.append(ExtElt(self.coroots[th], W.reflection(th)))
            self.labels.append("s0" + "'" * c)
        self.label_index = {lab: k for k, lab in enumerate(self.labels)}
        self.gen_index = {g: k for k, g in enumerate(self.gens)}
        self.identity = ExtElt(lattice.zero(), 0)

        self._init_sample_point()
        self._len_cache: dict = {}
        self._walk_cache: dict = {}
        self._omega = None

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_data(cls, root_data: dict, free_rank: int, torsion_orders, simple_coroots):
        lattice = TranslationGroup(free_rank, tuple(torsion_orders))
        desc = dict(root_data)
        if "simple_roots" in desc and "simple_coroots" not in desc:
            desc["simple_coroots"] = [tuple(c[:free_rank]) for c in simple_coroots]
        rs = build_root_system(desc)
        return cls(rs, lattice, simple_coroots)

    def _build_torsion_matrices(self):
        """Per Weyl element, the matrix ``B`` with torsion' = torsion + B @ free."""
        rs, W = self.rs, self.W
        n = self.lattice.free_rank
        k = len(self.lattice.torsion_orders)
        simple_B = []
        for a, c in zip(rs.simple_roots, self.simple_coroots):
            ct = c[n:]
            simple_B.append(tuple(tuple(-ct[i] * a[j] for j in range(n)) for i in range(k)))
        mats = []
        for word in W.words:
            A = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
            B = tuple(tuple(0 for _ in range(n)) for _ in range(k))
            # w = s_{w0} s_{w1} ...; build right to left: (A1,B1) o (A2,B2) = (A1 A2, B2 + B1 A2)
            for s in reversed(word):
                A1, B1 = W.simple_matrices[s], simple_B[s]
                B = tuple(tuple(B[i][j] + sum(B1[i][m] * A[m][j] for m in range(n)) for j in range(n))
                          for i in range(k))
                A = tuple(tuple(sum(A1[i][m] * A[m][j] for m in range(n)) for j in range(n))
                          for i in range(n))
            mats.append(tuple(tuple(x % d for x in row) for row, d in zip(B, self.lattice.torsion_orders)))
        return mats

    def _check_braids(self):
        """Verify the simple-reflection action on Lambda satisfies the Coxeter relations."""
        rs, W = self.rs, self.W
        basis = self.lattice.basis()
        r = rs.rank
        bad = []

        def s_act(i, lam):
            n = self.lattice.free_rank
            p = dot(rs.simple_roots[i], lam[:n])
            return self.lattice.sub(lam, self.lattice.scale(p, self.simple_coroots[i]))

        for i in range(r):
            for j in range(i + 1, r):
                m = {0: 2, 1: 3, 2: 4, 3: 6}[rs.cartan[i][j] * rs.cartan[j][i]]
                for lam in basis:
                    x = lam
                    for _ in range(m):
                        x = s_act(i, s_act(j, x))
                    if x != lam:
                        bad.append(f"(s{i + 1} s{j + 1})^{m} does not fix {lam}")
        if bad:
            raise ValidationFailed(bad)

    def _all_coroots(self) -> list[tuple]:
        rs, W = self.rs, self.W
        out: list = [None] * len(rs.roots)
        for w in range(len(W)):
            for k, si in enumerate(rs.simple_indices):
                j = W.act_root(w, si)
                c = self.act(w, self.simple_coroots[k])
                if out[j] is None:
                    out[j] = c
                elif out[j] != c:
                    raise ValidationFailed(
                        f"coroot of root {rs.roots[j]} is not well defined on the torsion part: "
                        f"{out[j]} vs {c}")
        return out

    def _init_sample_point(self):
        rs = self.rs
        n = self.lattice.free_rank
        rhs = [Fraction(0)] * rs.rank
        self.coxeter_numbers = []
        for c, comp in enumerate(rs.components):
            h = rs.coxeter_number(c)
            self.coxeter_numbers.append(h)
            for i in comp:
                rhs[i] = Fraction(1, h)
        if rs.rank:
            x = solve_rational([list(a) for a in rs.simple_roots], rhs)
        else:
            x = [Fraction(0)] * n
        D = 1
        for v in list(x) + [Fraction(1, h) for h in self.coxeter_numbers]:
            D = lcm(D, v.denominator)
        self.scale = D
        self.sample = tuple(int(v * D) for v in x)

    # ------------------------------------------------------------------
    # group law

    def act(self, u: int, lam) -> tuple:
        """``u(lam)`` for ``u`` in W and ``lam`` in Lambda."""
        key = (u, lam)
        r = self._act_cache.get(key)
        if r is None:
            n = self.lattice.free_rank
            f = lam[:n]
            A = self.W.matrices[u]
            free = tuple(sum(a * b for a, b in zip(row, f)) for row in A)
            B = self._torsion_mats[u]
            tor = tuple((t + sum(a * b for a, b in zip(row, f))) % d
                        for t, row, d in zip(lam[n:], B, self.lattice.torsion_orders))
            r = free + tor
            if len(self._act_cache) < 500000:
                self._act_cache[key] = r
        return r

    def mul(self, a: ExtElt, b: ExtElt) -> ExtElt:
        return ExtElt(self.lattice.add(a.lam, self.act(a.u, b.lam)), self.W.mul(a.u, b.u))

    def inverse(self, a: ExtElt) -> ExtElt:
        ui = self.W.inverse[a.u]
        return ExtElt(self.lattice.neg(self.act(ui, a.lam)), ui)

    def translation(self, lam) -> ExtElt:
        return ExtElt(self.lattice.canon(lam), 0)

    def finite(self, u: int) -> ExtElt:
        return ExtElt(self.lattice.zero(), u)

    def from_word(self, word) -> ExtElt:
        x = self.identity
        for s in word:
            x = self.mul(x, self.gens[s])
        return x

    def conj(self, g: ExtElt, x: ExtElt) -> ExtElt:
        return self.mul(self.mul(g, x), self.inverse(g))

    # ------------------------------------------------------------------
    # pairings and the apartment

    def pairing(self, root_index: int, lam) -> int:
        return dot(self.rs.roots[root_index], lam[: self.lattice.free_rank])

    def simple_pairings(self, lam) -> list[int]:
        n = self.lattice.free_rank
        return [dot(a, lam[:n]) for a in self.rs.simple_roots]

    def point(self, w: ExtElt) -> tuple:
        """Image of the base-alcove sample point under ``w``, scaled by ``self.scale``."""
        n = self.lattice.free_rank
        A = self.W.matrices[w.u]
        D = self.scale
        return tuple(D * w.lam[i] + sum(a * b for a, b in zip(A[i], self.sample)) for i in range(n))

    def _is_descent_at(self, s: int, pt) -> bool:
        rs = self.rs
        if s < rs.rank:
            return dot(rs.simple_roots[s], pt) < 0
        th = rs.highest_roots[s - rs.rank]
        return dot(rs.roots[th], pt) > self.scale

    def _reflect_point(self, s: int, pt) -> tuple:
        rs = self.rs
        n = self.lattice.free_rank
        if s < rs.rank:
            p = dot(rs.simple_roots[s], pt)
            c = rs.simple_coroots[s]
            return tuple(x - p * y for x, y in zip(pt, c))
        th = rs.highest_roots[s - rs.rank]
        p = dot(rs.roots[th], pt) - self.scale
        c = self.coroots[th][:n]
        return tuple(x - p * y for x, y in zip(pt, c))

    def is_left_descent(self, s: int, w: ExtElt) -> bool:
        """Whether ``l(s w) < l(w)``, decided by which side of the wall of ``s`` ``w(A)`` lies."""
        return self._is_descent_at(s, self.point(w))

    def is_right_descent(self, w: ExtElt, s: int) -> bool:
        return self._is_descent_at(s, self.point(self.inverse(w)))

    # ------------------------------------------------------------------
    # length

    def length(self, w: ExtElt) -> int:
        """Closed formula: sum over positive roots of ``|<a, lam>|`` or ``|<a, lam> - 1|``."""
        r = self._len_cache.get(w)
        if r is not None:
            return r
        rs = self.rs
        n = self.lattice.free_rank
        f = w.lam[:n]
        neg = self.W.inverse_negates[w.u]
        total = 0
        for k, a in enumerate(rs.positive_indices):
            p = dot(rs.roots[a], f)
            total += abs(p - 1) if neg[k] else abs(p)
        if len(self._len_cache) < 500000:
            self._len_cache[w] = total
        return total

    def gallery_walk(self, w: ExtElt) -> tuple[tuple[int, ...], ExtElt]:
        """Reduced word ``v`` in the simple affine reflections and ``tau`` with ``v * tau = w``.

        Letters are generator indices (see :attr:`labels`); ``tau`` stabilizes
        the base alcove.  Uses only the geometric descent test, never the
        length formula.
        """
        hit = self._walk_cache.get(w)
        if hit is not None:
            return hit
        pt = self.point(w)
        word = []
        cur = w
        nsim = len(self.gens)
        while True:
            for s in range(nsim):
                if self._is_descent_at(s, pt):
                    word.append(s)
                    pt = self._reflect_point(s, pt)
                    cur = self.mul(self.gens[s], cur)
                    break
            else:
                break
        res = (tuple(word), cur)
        if len(self._walk_cache) < 500000:
            self._walk_cache[w] = res
        return res

    def omega_part(self, w: ExtElt) -> ExtElt:
        return self.gallery_walk(w)[1]

    def waff_part(self, w: ExtElt) -> ExtElt:
        """``w * Omega_G(w)^-1``, the component in the affine Weyl group."""
        return self.mul(w, self.inverse(self.omega_part(w)))

    def reduced_word(self, w: ExtElt) -> tuple[int, ...]:
        return self.gallery_walk(w)[0]

    # ------------------------------------------------------------------
    # Bruhat order

    def bruhat_leq(self, a: ExtElt, b: ExtElt) -> bool:
        wa, ta = self.gallery_walk(a)
        wb, tb = self.gallery_walk(b)
        if ta != tb:
            return False
        return self._waff_leq(self.from_word(wa), wb, {})

    def _waff_leq(self, a: ExtElt, bword: tuple, memo) -> bool:
        # property Z: if s b < b then a <= b iff min(a, s a) <= s b
        key = (a, bword)
        if key in memo:
            return memo[key]
        la = len(self.reduced_word(a))
        if la > len(bword):
            res = False
        elif not bword:
            res = la == 0
        else:
            s = bword[0]
            rest = bword[1:]
            if self.is_left_descent(s, a):
                res = self._waff_leq(self.mul(self.gens[s], a), rest, memo)
            else:
                res = self._waff_leq(a, rest, memo)
        memo[key] = res
        return res

    # ------------------------------------------------------------------
    # dominance and orbits

    def is_dominant(self, lam) -> bool:
        return all(p >= 0 for p in self.simple_pairings(lam))

    def two_rho_vee(self) -> tuple:
        acc = self.lattice.zero()
        for a in self.rs.positive_indices:
            acc = self.lattice.add(acc, self.coroots[a])
        return acc

    def dominant_decompose(self, lam) -> tuple[tuple, tuple]:
        """``(lam1, lam2)`` dominant with ``lam = lam1 - lam2`` and ``lam2 = k * 2rho^vee``, k minimal."""
        lam = self.lattice.canon(lam)
        if not self.rs.rank:
            return lam, self.lattice.zero()
        # <alpha_i, 2 rho^vee> = 2 for every simple root
        k = max([0] + [_ceil_div(-p, 2) for p in self.simple_pairings(lam)])
        lam2 = self.lattice.scale(k, self.two_rho_vee())
        return self.lattice.add(lam, lam2), lam2

    def _fundamental_dominants(self) -> list[tuple]:
        """Per simple root ``i``: an element ``d`` of Lambda with ``<alpha_j, d> = c_i delta_ij``, ``c_i > 0``."""
        if hasattr(self, "_fund"):
            return self._fund
        rs = self.rs
        n = self.lattice.free_rank
        out = []
        for i in range(rs.rank):
            rhs = [1 if j == i else 0 for j in range(rs.rank)]
            x = solve_rational([list(a) for a in rs.simple_roots], rhs)
            m = 1
            for v in x:
                m = lcm(m, v.denominator)
            out.append(tuple(int(v * m) for v in x) + (0,) * (self.lattice.dim - n))
        self._fund = out
        return out

    def small_dominant_decompose(self, lam) -> tuple[tuple, tuple]:
        """A dominant decomposition with ``lam2`` a small combination of fundamental-type elements."""
        lam = self.lattice.canon(lam)
        lam2 = self.lattice.zero()
        fund = self._fundamental_dominants()
        for i, p in enumerate(self.simple_pairings(lam)):
            if p < 0:
                c = self.simple_pairings(fund[i])[i]
                lam2 = self.lattice.add(lam2, self.lattice.scale(_ceil_div(-p, c), fund[i]))
        return self.lattice.add(lam, lam2), lam2

    def weyl_orbit(self, lam) -> tuple[tuple, ...]:
        lam = self.lattice.canon(lam)
        seen = {lam}
        stack = [lam]
        while stack:
            x = stack.pop()
            for i in range(self.rs.rank):
                y = self.act(self.W.simple[i], x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return tuple(sorted(seen))

    def dominant_in_orbit(self, orbit) -> list[tuple]:
        return [lam for lam in orbit if self.is_dominant(lam)]

    # ------------------------------------------------------------------
    # Omega

    def omega_generators(self) -> list[ExtElt]:
        """``Omega_G(t_e)`` for each basis vector ``e`` of Lambda, deduplicated, identity dropped."""
        out = []
        for e in self.lattice.basis():
            tau = self.omega_part(self.translation(e))
            if tau != self.identity and tau not in out:
                out.append(tau)
        return out

    def omega_elements(self, cap: int = 256) -> tuple[list[ExtElt], bool]:
        """The length-zero subgroup generated by :meth:`omega_generators`.

        Returns ``(elements, complete)``; ``complete`` is False when the group
        is infinite (central directions) and the closure was truncated at ``cap``.
        """
        if self._omega is not None and self._omega[2] == cap:
            return self._omega[0], self._omega[1]
        gens = self.omega_generators()
        gens = gens + [self.inverse(g) for g in gens]
        seen = [self.identity]
        index = {self.identity}
        queue = deque([self.identity])
        complete = True
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul(x, g)
                if y not in index:
                    if len(seen) >= cap:
                        complete = False
                        queue.clear()
                        break
                    index.add(y)
                    seen.append(y)
                    queue.append(y)
        self._omega = (seen, complete, cap)
        return seen, complete

    def omega_permutation(self, tau: ExtElt) -> dict[str, str]:
        """Permutation of the simple affine reflections induced by conjugation by ``tau``."""
        out = {}
        for k, g in enumerate(self.gens):
            img = self.conj(tau, g)
            j = self.gen_index.get(img)
            if j is None:
                raise ValidationFailed(f"{self.labels[k]} conjugated by a length-zero element is not simple")
            out[self.labels[k]] = self.labels[j]
        return out

    # ------------------------------------------------------------------
    # enumeration windows

    def waff_ball(self, max_len: int) -> list[ExtElt]:
        """All elements of the affine Weyl group with length <= max_len, by length."""
        layer = [self.identity]
        out = [self.identity]
        seen = {self.identity}
        for _ in range(max_len):
            nxt = []
            for w in layer:
                pt = self.point(w)
                for s, g in enumerate(self.gens):
                    if self._is_descent_at(s, pt):
                        continue
                    y = self.mul(g, w)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            layer = nxt
            out.extend(layer)
        return out

    def ball(self, max_len: int, omega_cap: int = 256) -> list[ExtElt]:
        """All elements of length <= max_len (affine part times every Omega element)."""
        omega, _ = self.omega_elements(omega_cap)
        waff = self.waff_ball(max_len)
        return [self.mul(w, t) for w in waff for t in omega]

    def translations_up_to(self, max_len: int, central_box: int = 0) -> list[tuple]:
        """All ``lam`` with ``l(t_lam) <= max_len``.

        Pairings with simple roots are bounded by the length, which bounds the
        free part up to central directions; those are limited to ``|x| <= central_box``.
        """
        rs = self.rs
        n = self.lattice.free_rank
        r = rs.rank
        found = set()
        torsions = self.lattice.torsion_elements()
        kernel = _integer_kernel_basis([list(a) for a in rs.simple_roots], n)

        def rec(i, prefix, budget):
            if i == r:
                yield tuple(prefix)
                return
            for p in range(-budget, budget + 1):
                yield from rec(i + 1, prefix + [p], budget - abs(p))

        offsets = [tuple([0] * n)]
        for vec in kernel:
            offsets = [tuple(o[j] + k * vec[j] for j in range(n))
                       for o in offsets for k in range(-central_box, central_box + 1)]
        for p in rec(0, [], max_len):
            x = solve_rational([list(a) for a in rs.simple_roots], list(p)) if r else [Fraction(0)] * n
            if x is None or any(v.denominator != 1 for v in x):
                # try to clear denominators along central directions
                x = _integral_preimage([list(a) for a in rs.simple_roots], list(p), n, kernel)
                if x is None:
                    continue
            base = tuple(int(v) for v in x)
            for off in offsets:
                free = tuple(a + b for a, b in zip(base, off))
                for t in torsions:
                    lam = free + t
                    if self.length(ExtElt(lam, 0)) <= max_len:
                        found.add(lam)
        return sorted(found, key=lambda lam: (self.length(ExtElt(lam, 0)), lam))

    # ------------------------------------------------------------------
    # walls and parameters

    def canonical_wall(self, root: int, level: int) -> AffineWall:
        if not self.rs.positive[root]:
            return AffineWall(self.rs.negative_of(root), -level)
        return AffineWall(root, level)

    def wall_reflection(self, wall: AffineWall) -> ExtElt:
        """The reflection ``x -> x - (<b, x> - k) b^vee`` as ``(k b^vee, s_b)``."""
        b, k = wall
        return ExtElt(self.lattice.scale(k, self.coroots[b]), self.W.reflection(b))

    def wall_type(self, wall: AffineWall) -> int:
        """Index of the simple affine reflection conjugate to the reflection in ``wall``.

        Conjugates by length-descending steps ``r -> s r s`` until length 1.
        """
        r = self.wall_reflection(wall)
        while True:
            lr = self.length(r)
            if lr == 1:
                j = self.gen_index.get(r)
                if j is None:
                    raise ValidationFailed(f"length-one reflection {r} is not simple")
                return j
            for s, g in enumerate(self.gens):
                y = self.mul(self.mul(g, r), g)
                if self.length(y) == lr - 2:
                    r = y
                    break
            else:
                raise ValidationFailed(f"no length-descending conjugation for reflection {r}")

    def wall_parameter(self, wall: AffineWall, params: ParamSys) -> int:
        return params[self.labels[self.wall_type(wall)]]

    def root_gcd(self, root: int) -> int:
        g = 0
        for e in self.lattice.basis():
            g = gcd(g, self.pairing(root, e))
        return g

    def hyperplane_family_transitive(self, root: int, bound: int = 100000) -> bool:
        """Whether some element maps the wall ``<root, x> = 0`` onto ``<root, x> = 1``.

        Breadth-first search over walls ``(b, k mod 2 g_b)`` under simple
        reflections and translations by basis vectors of Lambda.
        """
        rs = self.rs
        g = self.root_gcd(root)
        mod = 2 * g if g else 0

        def canon(b, k):
            if mod:
                k %= mod
            if not rs.positive[b]:
                b, k = rs.negative_of(b), -k
                if mod:
                    k %= mod
            return b, k

        start = canon(root, 0)
        target = canon(root, 1)
        seen = {start}
        queue = deque([start])
        basis = self.lattice.basis()
        while queue:
            b, k = queue.popleft()
            if (b, k) == target:
                return True
            nbrs = [canon(rs.reflect_root(b, si), k) for si in rs.simple_indices]
            for e in basis:
                p = self.pairing(b, e)
                nbrs.append(canon(b, k + p))
                nbrs.append(canon(b, k - p))
            for y in nbrs:
                if y not in seen:
                    if len(seen) >= bound:
                        raise BoundExceeded(f"wall orbit exceeded {bound} states without reaching the target")
                    seen.add(y)
                    queue.append(y)
        return False

    def coxeter_order(self, i: int, j: int, cap: int = 12) -> int | None:
        """Order of ``s_i s_j`` (None for infinite)."""
        g = self.mul(self.gens[i], self.gens[j])
        x = g
        for m in range(1, cap + 1):
            if x == self.identity:
                return m
            x = self.mul(x, g)
        return None

    def validate_params(self, params: ParamSys) -> ParamReport:
        report = ParamReport()
        labels = self.labels
        for lab in labels:
            if lab not in params.weight:
                report.violations.append(("missing", lab, lab))
            elif not isinstance(params.weight[lab], int) or params.weight[lab] <= 0:
                report.violations.append(("non-positive", lab, lab))
        if report.violations:
            return report
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                m = self.coxeter_order(i, j)
                if m is not None and m % 2 == 1 and params[labels[i]] != params[labels[j]]:
                    report.violations.append(("odd-edge", labels[i], labels[j]))
        for tau in self.omega_generators():
            for a, b in self.omega_permutation(tau).items():
                if params[a] != params[b]:
                    pair = ("omega-orbit",) + tuple(sorted((a, b), key=self.label_index.get))
                    if pair not in report.violations:
                        report.violations.append(pair)
        return report

    def normalized_weight(self, w: ExtElt, params: ParamSys) -> int:
        return sum(params[self.labels[s]] for s in self.reduced_word(w))

    # ------------------------------------------------------------------
    # conjugation chains

    def find_length_increasing_conjugation(self, w: ExtElt, cap: int = 10):
        """Letters ``s_1..s_n, s`` with conjugation keeping length then strictly increasing it."""
        if w.u == 0:
            raise NotATranslationRequired(f"{w} is a translation")
        lw = self.length(w)
        seen = {w}
        frontier = [(w, ())]
        for depth in range(cap + 1):
            nxt = []
            for y, chain in frontier:
                for s, g in enumerate(self.gens):
                    z = self.mul(self.mul(g, y), g)
                    lz = self.length(z)
                    if lz > lw:
                        return chain + (s,)
                    if lz == lw and z not in seen and depth < cap:
                        seen.add(z)
                        nxt.append((z, chain + (s,)))
            frontier = nxt
            if not frontier:
                break
        raise NotFound(cap, f"no length-increasing conjugation chain within depth {cap}")

    # ------------------------------------------------------------------
    # rendering

    def word_label(self, word) -> str:
        return ".".join(self.labels[s] for s in word)

    def render_translation(self, lam) -> str:
        n = self.lattice.free_rank
        free = ",".join(str(x) for x in lam[:n])
        tor = ",".join(str(x) for x in lam[n:])
        return f"({free};{tor})"

    def render_omega(self, tau: ExtElt) -> str:
        if tau == self.identity:
            return "1"
        parts = []
        if any(tau.lam):
            parts.append(self.render_translation(tau.lam))
        if tau.u:
            parts.append(".".join(self.labels[s] for s in self.W.words[tau.u]))
        return ".".join(parts)

    def render(self, w: ExtElt) -> str:
        word, tau = self.gallery_walk(w)
        parts = []
        if word:
            parts.append(self.word_label(word))
        if tau != self.identity:
            parts.append(self.render_omega(tau))
        return ".".join(parts) if parts else "1"

    def sort_key(self, w: ExtElt):
        word, tau = self.gallery_walk(w)
        return (self.render_omega(tau), len(word), tuple(self.labels[s] for s in word))


def _integer_kernel_basis(rows: list[list[int]], n: int) -> list[tuple[int, ...]]:
    """A rational kernel basis of ``rows`` scaled to integer vectors."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    m = len(rows)
    aug = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    free_cols = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -aug[i][fc]
        den = 1
        for v in vec:
            den = lcm(den, v.denominator)
        out.append(tuple(int(v * den) for v in vec))
    return out


def _integral_preimage(rows, rhs, n, kernel, box: int = 6):
    """Search small kernel shifts for an integral solution of ``rows x = rhs``."""
    x = solve_rational(rows, rhs)
    if x is None:
        return None
    if not kernel:
        return None
    # kernel vectors are integral; shifting by rational multiples may clear denominators
    den = 1
    for v in x:
        den = lcm(den, v.denominator)
    steps = [Fraction(k, den) for k in range(-box * den, box * den + 1)]
    def rec(i, cur):
        if i == len(kernel):
            if all(v.denominator == 1 for v in cur):
                return cur
            return None
        for t in steps:
            res = rec(i + 1, [a + t * b for a, b in zip(cur, kernel[i])])
            if res is not None:
                return res
        return None
    if len(kernel) > 2:
        return None
    return rec(0, list(x))
