"""Clifford circuits and tableaus acting on signed Paulis by conjugation.

A :class:`CliffordTableau` stores the conjugation images of the generators
X_j and Z_j, which is enough to conjugate any signed Pauli with exact sign
tracking.  :class:`Circuit` is an ordered gate list over the generating set
{H, P, PDG, X, Y, Z, CNOT, CZ, SWAP} and can conjugate a single Pauli
gate-by-gate without ever building a tableau.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import SignedPauli

__all__ = [
    "Circuit",
    "CliffordTableau",
    "CircuitParseError",
    "GATE_ARITY",
    "prep_clifford_for",
    "meas_basis_change",
]

GATE_ARITY = {
    "H": 1, "P": 1, "PDG": 1, "X": 1, "Y": 1, "Z": 1,
    "CNOT": 2, "CZ": 2, "SWAP": 2,
}

_SELF_INVERSE = {"H", "X", "Y", "Z", "CNOT", "CZ", "SWAP"}
_INVERSE_NAME = {"P": "PDG", "PDG": "P"}


class CircuitParseError(ValueError):
    """Raised for malformed circuit text; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _apply_gate(name: str, qubits: tuple[int, ...],
                x: int, z: int, phase: int) -> tuple[int, int, int]:
    """Conjugate the Pauli (x, z, phase) by one gate: P -> g P g†."""
    if name == "H":
        (q,) = qubits
        xb = (x >> q) & 1
        zb = (z >> q) & 1
        if xb & zb:
            phase += 2
        x ^= (xb ^ zb) << q
        z ^= (xb ^ zb) << q
    elif name == "P":
        (q,) = qubits
        xb = (x >> q) & 1
        zb = (z >> q) & 1
        if xb & zb:
            phase += 2
        z ^= xb << q
    elif name == "PDG":
        (q,) = qubits
        xb = (x >> q) & 1
        zb = (z >> q) & 1
        if xb & (zb ^ 1):
            phase += 2
        z ^= xb << q
    elif name == "X":
        (q,) = qubits
        if (z >> q) & 1:
            phase += 2
    elif name == "Y":
        (q,) = qubits
        if ((x >> q) ^ (z >> q)) & 1:
            phase += 2
    elif name == "Z":
        (q,) = qubits
        if (x >> q) & 1:
            phase += 2
    elif name == "CNOT":
        c, t = qubits
        xc = (x >> c) & 1
        zc = (z >> c) & 1
        xt = (x >> t) & 1
        zt = (z >> t) & 1
        if xc & zt & (xt ^ zc ^ 1):
            phase += 2
        x ^= xc << t
        z ^= zt << c
    elif name == "CZ":
        c, t = qubits
        xc = (x >> c) & 1
        zc = (z >> c) & 1
        xt = (x >> t) & 1
        zt = (z >> t) & 1
        if xc & xt & (zc ^ zt):
            phase += 2
        z ^= (xc << t) | (xt << c)
    elif name == "SWAP":
        a, b = qubits
        xa = (x >> a) & 1
        xb = (x >> b) & 1
        za = (z >> a) & 1
        zb = (z >> b) & 1
        x ^= ((xa ^ xb) << a) | ((xa ^ xb) << b)
        z ^= ((za ^ zb) << a) | ((za ^ zb) << b)
    else:
        raise ValueError(f"unknown gate {name!r}")
    return x, z, phase


@dataclass(frozen=True)
class Circuit:
    """Ordered Clifford gate list on ``n`` qubits."""

    n: int
    gates: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        gates = tuple((name, tuple(qs)) for name, qs in self.gates)
        for name, qs in gates:
            arity = GATE_ARITY.get(name)
            if arity is None:
                raise ValueError(f"unknown gate {name!r}")
            if len(qs) != arity:
                raise ValueError(f"{name} expects {arity} qubit(s), got {qs}")
            if any(not 0 <= q < self.n for q in qs):
                raise ValueError(f"{name} {qs}: qubit index out of range for n={self.n}")
            if arity == 2 and qs[0] == qs[1]:
                raise ValueError(f"{name} {qs}: qubit indices must be distinct")
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)

    def conjugate_pauli(self, p: SignedPauli) -> SignedPauli:
        """Return C p C† for this circuit C, with exact sign."""
        if p.n != self.n:
            raise ValueError(f"qubit count mismatch: {p.n} != {self.n}")
        x, z, phase = p.x, p.z, p.phase
        for name, qs in self.gates:
            x, z, phase = _apply_gate(name, qs, x, z, phase)
        return SignedPauli(self.n, x, z, phase)

    def inverse(self) -> Circuit:
        gates = tuple(
            (_INVERSE_NAME.get(name, name), qs) for name, qs in reversed(self.gates)
        )
        return Circuit(self.n, gates)

    def then(self, other: Circuit) -> Circuit:
        """This circuit followed by ``other``."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        return Circuit(self.n, self.gates + other.gates)

    # -- text format ---------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> Circuit:
        """Parse the line-oriented format: ``QUBITS n`` then one gate per line."""
        n = None
        gates: list[tuple[str, tuple[int, ...]]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if n is None:
                if fields[0] != "QUBITS" or len(fields) != 2:
                    raise CircuitParseError("expected header 'QUBITS n'", lineno)
                try:
                    n = int(fields[1])
                except ValueError:
                    raise CircuitParseError(f"bad qubit count {fields[1]!r}", lineno) from None
                if n < 1:
                    raise CircuitParseError(f"qubit count must be positive, got {n}", lineno)
                continue
            name = fields[0]
            arity = GATE_ARITY.get(name)
            if arity is None:
                raise CircuitParseError(f"unknown gate {name!r}", lineno)
            if len(fields) - 1 != arity:
                raise CircuitParseError(
                    f"{name} expects {arity} qubit index(es), got {len(fields) - 1}", lineno)
            try:
                qs = tuple(int(f) for f in fields[1:])
            except ValueError:
                raise CircuitParseError(f"bad qubit index in {line!r}", lineno) from None
            if any(not 0 <= q < n for q in qs):
                raise CircuitParseError(f"qubit index out of range for n={n}", lineno)
            if arity == 2 and qs[0] == qs[1]:
                raise CircuitParseError("two-qubit gate needs distinct qubits", lineno)
            gates.append((name, qs))
        if n is None:
            raise CircuitParseError("missing 'QUBITS n' header", 1)
        return cls(n, tuple(gates))

    def to_text(self) -> str:
        lines = [f"QUBITS {self.n}"]
        lines += [f"{name} {' '.join(str(q) for q in qs)}" for name, qs in self.gates]
        return "\n".join(lines) + "\n"

    def gate_string(self) -> str:
        """Compact one-line rendering, gates joined by ';'."""
        return ";".join(f"{name} {' '.join(str(q) for q in qs)}" for name, qs in self.gates)

    @classmethod
    def from_gate_string(cls, n: int, text: str) -> Circuit:
        gates = []
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            fields = part.split()
            gates.append((fields[0], tuple(int(f) for f in fields[1:])))
        return cls(n, tuple(gates))


@dataclass(frozen=True)
class CliffordTableau:
    """Clifford unitary represented by the conjugation images of X_j and Z_j."""

    n: int
    x_images: tuple[SignedPauli, ...]
    z_images: tuple[SignedPauli, ...]

    def __post_init__(self) -> None:
        if len(self.x_images) != self.n or len(self.z_images) != self.n:
            raise ValueError("tableau needs n X-images and n Z-images")
        for img in (*self.x_images, *self.z_images):
            if img.n != self.n:
                raise ValueError("image qubit count mismatch")

    @classmethod
    def identity(cls, n: int) -> CliffordTableau:
        xs = tuple(SignedPauli.single(n, j, "X") for j in range(n))
        zs = tuple(SignedPauli.single(n, j, "Z") for j in range(n))
        return cls(n, xs, zs)

    @classmethod
    def from_circuit(cls, circuit: Circuit) -> CliffordTableau:
        n = circuit.n
        rows = [[1 << j, 0, 0] for j in range(n)] + [[0, 1 << j, 0] for j in range(n)]
        for name, qs in circuit.gates:
            for row in rows:
                row[0], row[1], row[2] = _apply_gate(name, qs, row[0], row[1], row[2])
        xs = tuple(SignedPauli(n, *rows[j]) for j in range(n))
        zs = tuple(SignedPauli(n, *rows[n + j]) for j in range(n))
        return cls(n, xs, zs)

    def conjugate(self, p: SignedPauli) -> SignedPauli:
        """Return U p U† with exact sign."""
        if p.n != self.n:
            raise ValueError(f"qubit count mismatch: {p.n} != {self.n}")
        acc = SignedPauli.identity(self.n)
        mask = p.x | p.z
        for j in range(self.n):
            if not (mask >> j) & 1:
                continue
            if (p.x >> j) & 1:
                acc = acc * self.x_images[j]
            if (p.z >> j) & 1:
                acc = acc * self.z_images[j]
        return acc.scaled(p._xz_exponent())

    def compose(self, other: CliffordTableau) -> CliffordTableau:
        """Tableau of self∘other: conjugation first by ``other``, then ``self``."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        xs = tuple(self.conjugate(img) for img in other.x_images)
        zs = tuple(self.conjugate(img) for img in other.z_images)
        return CliffordTableau(self.n, xs, zs)

    def inverse(self) -> CliffordTableau:
        """Tableau of U†, signs included."""
        n = self.n
        # The symplectic matrix row for generator g is (x bits | z bits) of
        # its image; the inverse matrix is the transpose with the X/Z halves
        # swapped on both axes.
        rows = []
        for img in (*self.x_images, *self.z_images):
            rows.append((img.x, img.z))

        def entry(i: int, j: int) -> int:
            xi, zi = rows[i]
            half = j if j < n else j - n
            bits = xi if j < n else zi
            return (bits >> half) & 1

        images: list[SignedPauli] = []
        for i in range(2 * n):
            x = z = 0
            for j in range(2 * n):
                # M^{-1}[i][j] = M[(j+n) mod 2n][(i+n) mod 2n]
                v = entry((j + n) % (2 * n), (i + n) % (2 * n))
                if j < n:
                    x |= v << j
                else:
                    z |= v << (j - n)
            cand = SignedPauli(n, x, z, 0)
            target = (SignedPauli.single(n, i, "X") if i < n
                      else SignedPauli.single(n, i - n, "Z"))
            forward = self.conjugate(cand)
            if forward.x != target.x or forward.z != target.z:
                raise ValueError("tableau is not symplectic; cannot invert")
            if forward.phase != target.phase:
                cand = cand.negated()
            images.append(cand)
        return CliffordTableau(n, tuple(images[:n]), tuple(images[n:]))

    def validate(self) -> None:
        """Check the symplectic condition and ±1 image phases; raise on failure."""
        for img in (*self.x_images, *self.z_images):
            if img.phase % 2 != 0:
                raise ValueError(f"image {img} has imaginary phase")
        for i in range(self.n):
            if self.x_images[i].commutes_with(self.z_images[i]):
                raise ValueError(f"images of X_{i} and Z_{i} must anticommute")
            for j in range(self.n):
                if i != j:
                    if not self.x_images[i].commutes_with(self.z_images[j]):
                        raise ValueError(f"images of X_{i} and Z_{j} must commute")
                    if not self.x_images[i].commutes_with(self.x_images[j]):
                        raise ValueError(f"images of X_{i} and X_{j} must commute")
                    if not self.z_images[i].commutes_with(self.z_images[j]):
                        raise ValueError(f"images of Z_{i} and Z_{j} must commute")

    def key(self) -> tuple:
        """Hashable identity of the conjugation map (phase-exact)."""
        return tuple((img.x, img.z, img.phase) for img in (*self.x_images, *self.z_images))


# Per-letter state preparation and measurement basis changes.  |0> is the +1
# eigenstate of Z; H|0> of X; PH|0> of Y.  The same per-qubit table rotates
# X/Y measurements into the Z basis.
_BASIS_GATES = {"X": ("H",), "Y": ("H", "P"), "Z": ()}


def _local_basis_circuit(p: SignedPauli) -> Circuit:
    if p.weight == 0:
        raise ValueError("identity Pauli has no informative basis choice")
    if not p.is_hermitian:
        raise ValueError(f"{p} is not Hermitian")
    gates = []
    for q in p.support:
        for name in _BASIS_GATES[p.letter(q)]:
            gates.append((name, (q,)))
    return Circuit(p.n, tuple(gates))


def prep_clifford_for(m: SignedPauli) -> Circuit:
    """Single-qubit circuit C with C|0..0> a ±1 eigenstate of ``m``.

    The state is always the +1 eigenstate of the unsigned letter string, so
    the input expectation <m> equals ``m.sign``.
    """
    return _local_basis_circuit(m)


def meas_basis_change(p: SignedPauli) -> Circuit:
    """Single-qubit circuit C' rotating Z-basis parity measurements into ``p``.

    Conjugating ``p`` by the inverse of C' yields the Z-type Pauli on the
    support of ``p``; measuring Z on each support qubit after applying C'†
    and multiplying the outcome parity by ``p.sign`` estimates <p>.
    """
    return _local_basis_circuit(p)
