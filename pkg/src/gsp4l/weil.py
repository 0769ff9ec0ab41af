"""Symbolic calculus of real-Weil-group representations and gamma factors.

Irreducibles are the one-dimensional phi(+,t), phi(-,t) and two-dimensional
phi(l,t) (l >= 1).  Tensor products decompose by

  (+-,t1) x (+-,t2) = (+, t1+t2)          same signs
  (+-,t1) x (-+,t2) = (-, t1+t2)          opposite signs
  (+-,t1) x (l,t2)  = (l, t1+t2)
  (l1,t1) x (l2,t2) = (l1+l2, .) + (|l1-l2|, .)      if l1 != l2
                    = (l1+l2, .) + (+, .) + (-, .)   if l1 == l2

so l = 0 never appears as a stored two-dimensional irrep.  Gamma factors:
phi(+,t) -> GammaR(s+t), phi(-,t) -> GammaR(s+t+1), phi(l,t) ->
GammaC(s+t+l/2), with GammaR(s) = pi^(-s/2) Gamma(s/2) and
GammaC(s) = 2 (2 pi)^(-s) Gamma(s).
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError, ParseError, PoleHit, WeightTooSmall

PLUS = "one_dim_plus"
MINUS = "one_dim_minus"
TWO = "two_dim"

GAMMA_R = "GammaR"
GAMMA_C = "GammaC"


@dataclass(frozen=True)
class WeilIrrep:
    kind: str
    ell: int = 0
    t: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in (PLUS, MINUS, TWO):
            raise InvariantError(f"unknown irrep kind {self.kind!r}")
        if self.kind == TWO and self.ell < 1:
            raise InvariantError(f"two-dimensional irrep needs ell >= 1, got {self.ell}")
        if self.kind != TWO and self.ell != 0:
            raise InvariantError("one-dimensional irreps carry no ell")
        object.__setattr__(self, "t", Fraction(self.t))

    @property
    def dim(self) -> int:
        return 2 if self.kind == TWO else 1

    def _key(self):
        order = {TWO: 0, PLUS: 1, MINUS: 2}
        return (order[self.kind], -self.ell, self.t)

    def __str__(self):
        if self.kind == TWO:
            core = f"phi({self.ell})"
        else:
            core = "phi(+)" if self.kind == PLUS else "phi(-)"
        return core if self.t == 0 else f"{core}[t={self.t}]"


def phi_plus(t=0) -> WeilIrrep:
    return WeilIrrep(PLUS, t=Fraction(t))


def phi_minus(t=0) -> WeilIrrep:
    return WeilIrrep(MINUS, t=Fraction(t))


def phi(ell: int, t=0) -> WeilIrrep:
    return WeilIrrep(TWO, ell, Fraction(t))


class WeilRepSum:
    """A multiset of irreducibles (a semisimple representation)."""

    __slots__ = ("irreps",)

    def __init__(self, irreps):
        irreps = tuple(sorted(irreps, key=lambda r: r._key()))
        for r in irreps:
            if not isinstance(r, WeilIrrep):
                raise TypeError(f"not a WeilIrrep: {r!r}")
        self.irreps = irreps

    @property
    def dim(self) -> int:
        return sum(r.dim for r in self.irreps)

    def __iter__(self):
        return iter(self.irreps)

    def __len__(self):
        return len(self.irreps)

    def __eq__(self, other):
        if not isinstance(other, WeilRepSum):
            return NotImplemented
        return self.irreps == other.irreps

    def __hash__(self):
        return hash(self.irreps)

    def __repr__(self):
        return f"WeilRepSum([{', '.join(str(r) for r in self.irreps)}])"

    def __str__(self):
        return " + ".join(str(r) for r in self.irreps) if self.irreps else "0"


def _tensor_pair(a: WeilIrrep, b: WeilIrrep) -> list[WeilIrrep]:
    t = a.t + b.t
    one_a = a.kind != TWO
    one_b = b.kind != TWO
    if one_a and one_b:
        return [phi_plus(t) if a.kind == b.kind else phi_minus(t)]
    if one_a:
        return [phi(b.ell, t)]
    if one_b:
        return [phi(a.ell, t)]
    if a.ell != b.ell:
        return [phi(a.ell + b.ell, t), phi(abs(a.ell - b.ell), t)]
    return [phi(a.ell + b.ell, t), phi_plus(t), phi_minus(t)]


def tensor(a: WeilRepSum, b: WeilRepSum) -> WeilRepSum:
    """Distribute the tensor product over both multisets."""
    out = []
    for x in a:
        for y in b:
            out.extend(_tensor_pair(x, y))
    return WeilRepSum(out)


@dataclass(frozen=True)
class GammaAtom:
    """GammaR(s + shift) or GammaC(s + shift)."""

    kind: str
    shift: Fraction

    def __post_init__(self):
        if self.kind not in (GAMMA_R, GAMMA_C):
            raise InvariantError(f"unknown gamma kind {self.kind!r}")
        object.__setattr__(self, "shift", Fraction(self.shift))

    @property
    def degree(self) -> int:
        return 2 if self.kind == GAMMA_C else 1

    def __str__(self):
        s = f"s+{self.shift}" if self.shift > 0 else (
            "s" if self.shift == 0 else f"s{self.shift}"
        )
        return f"{self.kind}({s})"


def gamma_r(shift) -> GammaAtom:
    return GammaAtom(GAMMA_R, Fraction(shift))


def gamma_c(shift) -> GammaAtom:
    return GammaAtom(GAMMA_C, Fraction(shift))


def sort_atoms(atoms) -> list[GammaAtom]:
    """Canonical order: GammaC by descending shift, then GammaR ascending."""
    cs = sorted((a for a in atoms if a.kind == GAMMA_C), key=lambda a: -a.shift)
    rs = sorted((a for a in atoms if a.kind == GAMMA_R), key=lambda a: a.shift)
    return cs + rs


def l_factor(rep: WeilRepSum) -> list[GammaAtom]:
    """Archimedean factor of a representation, one atom per irreducible."""
    out = []
    for r in rep:
        if r.kind == PLUS:
            out.append(gamma_r(r.t))
        elif r.kind == MINUS:
            out.append(gamma_r(r.t + 1))
        else:
            out.append(gamma_c(r.t + Fraction(r.ell, 2)))
    return out


def total_degree(atoms) -> int:
    return sum(a.degree for a in atoms)


def spin_arch_param(k: int) -> WeilRepSum:
    """phi(2k-3) + phi(1): archimedean parameter of the spin transfer."""
    if k < 3:
        raise WeightTooSmall(f"spin parameter needs k >= 3, got {k}")
    return WeilRepSum([phi(2 * k - 3), phi(1)])


def std_arch_param(k: int) -> WeilRepSum:
    """phi(2k-2) + phi(2k-4) + phi(+): parameter of the standard transfer."""
    if k < 3:
        raise WeightTooSmall(f"standard parameter needs k >= 3, got {k}")
    return WeilRepSum([phi(2 * k - 2), phi(2 * k - 4), phi_plus()])


SPIN_SPIN = "spin_spin"
STD_STD = "std_std"


def rankin_arch_factors(k1: int, k2: int, rep_pair: str) -> list[GammaAtom]:
    """Gamma atoms of the tensor-pair convolution, canonically sorted."""
    if rep_pair == SPIN_SPIN:
        param = spin_arch_param
    elif rep_pair == STD_STD:
        param = std_arch_param
    else:
        raise InvariantError(f"unknown rep pair {rep_pair!r}")
    return sort_atoms(l_factor(tensor(param(k1), param(k2))))


# ---------------------------------------------------------------------------
# numeric evaluation

# Lanczos approximation, g = 7, 9 coefficients; ~14 significant digits for
# Re(z) >= 0.5, extended by reflection.  The duplication-identity test pins
# the accuracy actually delivered.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def loggamma(z: complex) -> complex:
    """log Gamma(z) for complex z off the nonpositive integers."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        raise ValueError(f"log-gamma pole at z = {z}")
    if z.real < 0.5:
        # reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        return cmath.log(cmath.pi) - cmath.log(cmath.sin(cmath.pi * z)) - loggamma(1 - z)
    w = z - 1
    acc = complex(_LANCZOS[0])
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (w + i)
    t = w + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (w + 0.5) * cmath.log(t) - t + cmath.log(acc)


@dataclass(frozen=True)
class GammaValue:
    """Product of gamma atoms in log space plus a best-effort value."""

    log_modulus: float
    phase: float
    value: complex


def _atom_log(atom: GammaAtom, s: complex) -> complex:
    z = s + float(atom.shift)
    if atom.kind == GAMMA_R:
        arg = z / 2
        if arg.imag == 0 and arg.real <= 0 and arg.real == int(arg.real):
            raise PoleHit(atom, arg)
        return -(z / 2) * math.log(math.pi) + loggamma(arg)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        raise PoleHit(atom, z)
    return math.log(2.0) - z * math.log(2 * math.pi) + loggamma(z)


def gamma_eval(atoms, s) -> GammaValue:
    """Evaluate the product of gamma atoms at s, in log space."""
    s = complex(s)
    total = 0j
    for atom in atoms:
        total += _atom_log(atom, s)
    log_mod = total.real
    phase = math.remainder(total.imag, 2 * math.pi)
    try:
        value = cmath.exp(complex(log_mod, phase))
    except OverflowError:
        value = complex(math.inf, math.inf)
    return GammaValue(log_mod, phase, value)


def pole_free_strip(atoms, re_lo, re_hi) -> bool:
    """True iff no atom hits a gamma pole for Re(s) in [re_lo, re_hi].

    Poles of GammaR(s + t) sit at s = -t - 2m, of GammaC(s + t) at
    s = -t - m, m = 0, 1, 2, ...; all shifts are real so the check is an
    exact lattice intersection with the closed strip.
    """
    lo = Fraction(re_lo)
    hi = Fraction(re_hi)
    if not lo < hi:
        raise InvariantError(f"need re_lo < re_hi, got [{lo}, {hi}]")
    for atom in atoms:
        step = 2 if atom.kind == GAMMA_R else 1
        # want integer m >= 0 with lo <= -t - step*m <= hi
        t = atom.shift
        m_min = (-hi - t) / step
        m_max = (-lo - t) / step
        m_lo = max(0, math.ceil(m_min))
        m_hi = math.floor(m_max)
        if m_lo <= m_hi:
            return False
    return True


# ---------------------------------------------------------------------------
# textual expression grammar: phi(+), phi(-), phi(l), joined by "+"

_TOKEN = re.compile(r"phi\(\s*([+-]|\d+)\s*\)")


def parse_rep_sum(text: str) -> WeilRepSum:
    """Parse e.g. ``phi(17)+phi(1)``; whitespace-insensitive."""
    irreps = []
    pos = 0
    n = len(text)
    expect_term = True
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if expect_term:
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError("expected phi(+), phi(-) or phi(l)", pos)
            arg = m.group(1)
            if arg == "+":
                irreps.append(phi_plus())
            elif arg == "-":
                irreps.append(phi_minus())
            else:
                ell = int(arg)
                if ell < 1:
                    raise ParseError(f"phi({ell}) needs l >= 1", pos)
                irreps.append(phi(ell))
            pos = m.end()
            expect_term = False
        else:
            if text[pos] != "+":
                raise ParseError(f"expected '+', found {text[pos]!r}", pos)
            pos += 1
            expect_term = True
    if expect_term:
        raise ParseError("expected a phi(...) term", pos)
    return WeilRepSum(irreps)
