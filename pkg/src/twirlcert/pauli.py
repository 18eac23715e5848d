"""Signed n-qubit Pauli operators in symplectic (bit-vector) form.

A Pauli is stored as a pair of packed bit vectors (one X bit and one Z bit
per qubit) plus a phase, so products, commutation checks and conjugation
stay linear-time in the number of qubits.  Qubit 0 is the leftmost tensor
factor in the letter rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["SignedPauli", "sample_random_pauli"]

_LETTERS = "IXYZ"
# letter -> (x bit, z bit)
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"": 0, "+": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}
_PHASE_VALUE = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}


@dataclass(frozen=True)
class SignedPauli:
    """Tensor product of single-qubit Paulis with an overall phase.

    Bit ``j`` of ``x`` / ``z`` is the X / Z component on qubit ``j``.
    ``phase`` is the exponent ``e`` of the scalar ``i**e`` multiplying the
    I/X/Y/Z letter string.  Instances are immutable; all operations return
    new values.

    The multiplication convention is fixed by ``Y = i X Z``.
    """

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        limit = 1 << self.n
        if not 0 <= self.x < limit or not 0 <= self.z < limit:
            raise ValueError(f"bit vectors out of range for n={self.n}")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> SignedPauli:
        return cls(n, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str, phase: int = 0) -> SignedPauli:
        """Build from an I/X/Y/Z string, optionally scaled by ``i**phase``."""
        x = z = 0
        for j, letter in enumerate(letters):
            try:
                xb, zb = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {letter!r}") from None
            x |= xb << j
            z |= zb << j
        return cls(len(letters), x, z, phase)

    @classmethod
    def from_string(cls, text: str) -> SignedPauli:
        """Parse a rendered Pauli such as ``-IYIXZ`` or ``+iXZ``."""
        s = text.strip()
        for prefix in ("+i", "-i", "i", "+", "-", ""):
            if s.startswith(prefix) and prefix != "":
                body = s[len(prefix):]
                break
        else:
            prefix, body = "", s
        if not body or any(c not in _LETTER_BITS for c in body):
            raise ValueError(f"cannot parse Pauli from {text!r}")
        return cls.from_letters(body, _PREFIX_PHASE[prefix])

    @classmethod
    def single(cls, n: int, qubit: int, letter: str, phase: int = 0) -> SignedPauli:
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        xb, zb = _LETTER_BITS[letter]
        return cls(n, xb << qubit, zb << qubit, phase)

    # -- structure ---------------------------------------------------------

    @property
    def weight(self) -> int:
        """Number of non-identity tensor factors (phase-independent)."""
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        mask = self.x | self.z
        return tuple(j for j in range(self.n) if (mask >> j) & 1)

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian Paulis; error otherwise."""
        if not self.is_hermitian:
            raise ValueError(f"{self} has an imaginary phase")
        return 1 if self.phase == 0 else -1

    @property
    def phase_value(self) -> complex:
        return _PHASE_VALUE[self.phase]

    def letters(self) -> str:
        """The I/X/Y/Z body without the sign prefix."""
        return "".join(self.letter(j) for j in range(self.n))

    def letter(self, qubit: int) -> str:
        xb = (self.x >> qubit) & 1
        zb = (self.z >> qubit) & 1
        return ("I", "X", "Z", "Y")[xb + 2 * zb]

    # -- algebra -----------------------------------------------------------

    def _xz_exponent(self) -> int:
        # exponent of i when written as i**s * prod_j X^x Z^z (X left of Z)
        return (self.phase + (self.x & self.z).bit_count()) % 4

    def __mul__(self, other: SignedPauli) -> SignedPauli:
        if not isinstance(other, SignedPauli):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        x = self.x ^ other.x
        z = self.z ^ other.z
        s = (self._xz_exponent() + other._xz_exponent()
             + 2 * (self.z & other.x).bit_count())
        return SignedPauli(self.n, x, z, (s - (x & z).bit_count()) % 4)

    def commutes_with(self, other: SignedPauli) -> bool:
        """True iff the symplectic inner product is even (phase-independent)."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        return ((self.x & other.z).bit_count()
                + (self.z & other.x).bit_count()) % 2 == 0

    def scaled(self, phase: int) -> SignedPauli:
        """Multiply by the scalar ``i**phase``."""
        return SignedPauli(self.n, self.x, self.z, self.phase + phase)

    def negated(self) -> SignedPauli:
        return self.scaled(2)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        body = "".join(self.letter(j) for j in range(self.n))
        return _PHASE_PREFIX[self.phase] + body

    def __repr__(self) -> str:
        return f"SignedPauli.from_string({str(self)!r})"


def sample_random_pauli(n: int, weight: int, rng: np.random.Generator) -> SignedPauli:
    """Draw a uniformly random signed Hermitian Pauli of the given weight.

    Uniform over the ``2 * 3**w * C(n, w)`` choices: support uniform over
    weight-``w`` subsets, each non-identity factor uniform over {X, Y, Z},
    overall sign uniform over {+1, -1}.  Deterministic given the generator
    state.
    """
    if not 1 <= weight <= n:
        raise ValueError(f"weight {weight} out of range 1..{n}")
    support = rng.choice(n, size=weight, replace=False)
    letters = rng.integers(1, 4, size=weight)  # 1=X, 2=Y, 3=Z
    sign = int(rng.integers(2)) * 2  # 0 -> +1, 2 -> -1
    x = z = 0
    for q, code in zip(support, letters):
        xb, zb = _LETTER_BITS[_LETTERS[code]]
        x |= xb << int(q)
        z |= zb << int(q)
    return SignedPauli(n, x, z, sign)
