"""Catalog of classical-bit-to-quantum encodings and encoded states.

An encoding assigns each bit value an orthonormal basis of a subspace of an
ambient space of dimension d; directions outside both logical subspaces are
"fixed": every synthesized gate must map them to themselves.

Bit order convention, used everywhere in the package: the first classical bit
is the most significant Kronecker factor, so "01" encodes to |0> kron |1>.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .linalg import as_vector, kron

__all__ = [
    "Encoding",
    "QuantumState",
    "StateKind",
    "StateClassification",
    "BUILTIN_ENCODINGS",
    "builtin_encoding",
    "encode_bits",
    "logical_subspace",
    "logical_span",
    "fixed_complement",
    "classify_state",
]

_ORTHO_TOL = 1e-12


def _as_basis(vectors, dim: int) -> np.ndarray:
    """Stack basis vectors as columns of a read-only (dim, k) array."""
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        cols = [vectors[:, j] for j in range(vectors.shape[1])]
    else:
        cols = list(vectors)
    if not cols:
        out = np.zeros((dim, 0), dtype=np.complex128)
        out.setflags(write=False)
        return out
    out = np.column_stack([as_vector(c) for c in cols])
    if out.shape[0] != dim:
        raise ValueError(f"basis vectors have dimension {out.shape[0]}, expected {dim}")
    out.setflags(write=False)
    return out


def _check_bits(bits: str) -> str:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"expected a nonempty bit string of 0s and 1s, got {bits!r}")
    return bits


@dataclass(frozen=True, eq=False)
class Encoding:
    """Assignment of bit values 0 and 1 to orthonormal subspace bases.

    basis0/basis1 hold the logical subspace bases as matrix columns; fixed
    holds the directions gates must map to themselves.  Together the columns
    must form an orthonormal basis of the full ambient space, and the two
    logical subspaces must have equal dimension (otherwise no unitary NOT
    can exist).
    """

    name: str
    ambient_dim: int
    basis0: np.ndarray
    basis1: np.ndarray
    fixed: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __eq__(self, other):
        if not isinstance(other, Encoding):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and np.array_equal(self.basis0, other.basis0)
            and np.array_equal(self.basis1, other.basis1)
            and np.array_equal(self.fixed, other.fixed)
        )

    __hash__ = object.__hash__

    def __post_init__(self):
        d = self.ambient_dim
        if d < 2:
            raise ValueError("ambient dimension must be at least 2")
        object.__setattr__(self, "basis0", _as_basis(self.basis0, d))
        object.__setattr__(self, "basis1", _as_basis(self.basis1, d))
        fixed = self.fixed if self.fixed is not None else np.zeros((d, 0))
        object.__setattr__(self, "fixed", _as_basis(fixed, d))
        if self.basis0.shape[1] != self.basis1.shape[1]:
            raise ValueError(
                "logical subspaces must have equal dimension "
                f"({self.basis0.shape[1]} vs {self.basis1.shape[1]}); "
                "no unitary NOT exists otherwise"
            )
        if self.basis0.shape[1] == 0:
            raise ValueError("logical subspaces must be at least one-dimensional")
        all_cols = np.hstack([self.basis0, self.basis1, self.fixed])
        if all_cols.shape[1] != d:
            raise ValueError(
                f"subspace dimensions {self.basis0.shape[1]}+{self.basis1.shape[1]}"
                f"+{self.fixed.shape[1]} do not add up to the ambient dimension {d}"
            )
        gram = all_cols.conj().T @ all_cols
        if np.linalg.norm(gram - np.eye(d)) > _ORTHO_TOL:
            raise ValueError("encoding basis vectors are not orthonormal")

    @property
    def bit_dim(self) -> int:
        """Dimension of each logical subspace."""
        return self.basis0.shape[1]

    def basis(self, bit: str) -> np.ndarray:
        return self.basis0 if bit == "0" else self.basis1

    def __repr__(self):
        return f"Encoding({self.name!r}, dim={self.ambient_dim})"


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Amplitude vector tagged with its encoding and subsystem count.

    States are stored unnormalized; probability-style readouts normalize on
    demand.  The zero vector is rejected.
    """

    amplitudes: np.ndarray
    encoding: Encoding
    subsystem_count: int

    def __post_init__(self):
        amps = as_vector(self.amplitudes).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if self.subsystem_count < 1:
            raise ValueError("subsystem_count must be positive")
        expected = self.encoding.ambient_dim ** self.subsystem_count
        if amps.size != expected:
            raise ValueError(
                f"state dimension {amps.size} does not match "
                f"d^n = {self.encoding.ambient_dim}^{self.subsystem_count}"
            )
        if np.linalg.norm(amps) == 0.0:
            raise ValueError("the zero vector is not a state")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> np.ndarray:
        """Unit-norm copy of the amplitude vector."""
        return self.amplitudes / self.norm


class StateKind(enum.Enum):
    LOGICAL = "logical"
    SUPERPOSITION = "superposition"
    OUTSIDE_CODE = "outside_code"


@dataclass(frozen=True)
class StateClassification:
    kind: StateKind
    bits: str | None = None

    def __str__(self):
        if self.kind is StateKind.LOGICAL:
            return f"logical({self.bits})"
        return self.kind.value


def _qubit() -> Encoding:
    return Encoding("qubit", 2, [[1, 0]], [[0, 1]])


def _qutrit() -> Encoding:
    return Encoding("qutrit", 3, [[1, 0, 0]], [[0, 0, 1]], [[0, 1, 0]])


def _ququart() -> Encoding:
    return Encoding(
        "ququart",
        4,
        [[1, 0, 0, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [0, 0, 1, 0]],
    )


def _matrix2() -> Encoding:
    # Row-major flattening of the matrix-unit spans {E11, E22} and {E12, E21}.
    return Encoding(
        "matrix2",
        4,
        [[1, 0, 0, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [0, 0, 1, 0]],
    )


def _pauli() -> Encoding:
    # Flattened spans {I, X} for 0 and {Y, Z} for 1, scaled to unit
    # Hilbert-Schmidt norm.
    s = 1 / np.sqrt(2)
    return Encoding(
        "pauli",
        4,
        [[s, 0, 0, s], [0, s, s, 0]],
        [[0, -1j * s, 1j * s, 0], [s, 0, 0, -s]],
    )


BUILTIN_ENCODINGS = ("qubit", "qutrit", "ququart", "matrix2", "pauli")

_BUILTIN_FACTORIES = {
    "qubit": _qubit,
    "qutrit": _qutrit,
    "ququart": _ququart,
    "matrix2": _matrix2,
    "pauli": _pauli,
}


def builtin_encoding(name: str) -> Encoding:
    """Return one of the built-in encodings by name."""
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        raise ValueError(
            f"unknown encoding {name!r}; expected one of {', '.join(BUILTIN_ENCODINGS)}"
        ) from None
    return factory()


def encode_bits(enc: Encoding, bits: str) -> QuantumState:
    """Encode a bit string as the Kronecker product of per-bit basis vectors.

    Each bit contributes the first basis vector of its logical subspace; the
    first bit is the most significant factor.
    """
    _check_bits(bits)
    amps = enc.basis(bits[0])[:, 0]
    for b in bits[1:]:
        amps = kron(amps, enc.basis(b)[:, 0])
    return QuantumState(amps, enc, len(bits))


def logical_subspace(enc: Encoding, bits: str) -> np.ndarray:
    """Orthonormal basis (as columns) of the logical subspace of a bit string.

    The basis is the Kronecker product of the per-bit subspace bases, ordered
    lexicographically in the per-bit basis indices.
    """
    _check_bits(bits)
    cols = enc.basis(bits[0])
    for b in bits[1:]:
        cols = kron(cols, enc.basis(b))
    return cols


def logical_span(enc: Encoding, n: int) -> np.ndarray:
    """Orthonormal basis of the span of all n-bit logical subspaces."""
    cols = np.hstack([enc.basis0, enc.basis1])
    out = cols
    for _ in range(n - 1):
        out = kron(out, cols)
    return out


def fixed_complement(enc: Encoding, n: int) -> np.ndarray:
    """Orthonormal basis of the complement gates must fix: all ambient product
    basis vectors with a fixed-complement direction on at least one factor."""
    d = enc.ambient_dim
    logical = np.hstack([enc.basis0, enc.basis1])
    full = np.hstack([logical, enc.fixed])
    k_log = logical.shape[1]
    out_cols = []

    def walk(vec, any_fixed, depth):
        if depth == n:
            if any_fixed:
                out_cols.append(vec)
            return
        for j in range(d):
            walk(kron(vec, full[:, j]), any_fixed or j >= k_log, depth + 1)

    walk(np.ones(1, dtype=np.complex128), False, 0)
    if not out_cols:
        return np.zeros((d**n, 0), dtype=np.complex128)
    return np.column_stack(out_cols)


def classify_state(enc: Encoding, s: QuantumState, tol: float) -> StateClassification:
    """Classify a state as logical, a superposition, or outside the code.

    Logical(b) if the projection onto the subspace of b carries at least
    (1-tol) of the squared norm; outside the code if the projection onto the
    span of all logical subspaces carries less than (1-tol); superposition
    otherwise.
    """
    if s.encoding is not enc and s.encoding != enc:
        raise ValueError("state was prepared under a different encoding")
    psi = s.normalized()
    n = s.subsystem_count
    best_bits = None
    best_weight = -1.0
    total = 0.0
    for idx in range(2**n):
        bits = format(idx, f"0{n}b")
        w = float(np.linalg.norm(logical_subspace(enc, bits).conj().T @ psi) ** 2)
        total += w
        if w > best_weight:
            best_weight = w
            best_bits = bits
    if best_weight >= 1.0 - tol:
        return StateClassification(StateKind.LOGICAL, best_bits)
    if total < 1.0 - tol:
        return StateClassification(StateKind.OUTSIDE_CODE)
    return StateClassification(StateKind.SUPERPOSITION)
