"""Concrete product sets and subspaces used as reference examples.

Local states are unnormalized: ``+``/``e`` is (1, 1) and ``-``/``f`` is (1, -1).
"""
from __future__ import annotations

from .errors import PreconditionError
from .linalg import kron_all
from .states import ProductSet, ProductVector, SubspaceBasis

LOCAL = {
    "0": (1, 0),
    "1": (0, 1),
    "+": (1, 1),
    "-": (1, -1),
    "e": (1, 1),
    "f": (1, -1),
}

SHIFTS = ["000", "1+-", "-1+", "+-1"]

K4 = ["0000", "01fe", "1e1e", "1fe0", "e001", "e1ff", "fe1f", "ffe1"]

K4_BAR = ["0000", "01fe", "1eee", "1f10", "e0f1", "e10f", "fe1f", "ffe1"]

K5 = [
    "00000",
    "001fe", "e001f", "fe001", "1fe00", "01fe0",
    "01e1e", "e01e1", "1e01e", "e1e01", "1e1e0",
    "1fffe", "e1fff", "fe1ff", "ffe1f", "fffe1",
]


def qubit_product(label: str) -> ProductVector:
    """``"01fe"`` -> the product vector |0>|1>|f>|e>."""
    try:
        return ProductVector(LOCAL[c] for c in label)
    except KeyError as exc:
        raise PreconditionError(f"unknown local state {exc.args[0]!r} in {label!r}") from None


def qubit_set(labels) -> ProductSet:
    return ProductSet(qubit_product(lab) for lab in labels)


def ghz(n: int, sign: int = 1) -> tuple:
    """Unnormalized |0...0> + sign |1...1> on ``n`` qubits."""
    if n < 1:
        raise PreconditionError("ghz needs n >= 1")
    v = [0] * 2**n
    v[0], v[-1] = 1, sign
    return tuple(v)


def shor_basis() -> SubspaceBasis:
    psi0 = kron_all([ghz(3)] * 3)
    psi1 = kron_all([ghz(3, -1)] * 3)
    return SubspaceBasis((2,) * 9, [psi0, psi1])


NAMES = ("shifts", "k4", "k4bar", "k5", "shor", "ghz")


def catalog(name: str, n: int = 3) -> ProductSet | SubspaceBasis:
    """Look up a named example. ``n`` is only used by ``ghz``."""
    key = name.lower()
    if key == "shifts":
        return qubit_set(SHIFTS)
    if key == "k4":
        return qubit_set(K4)
    if key == "k4bar":
        return qubit_set(K4_BAR)
    if key == "k5":
        return qubit_set(K5)
    if key == "shor":
        return shor_basis()
    if key == "ghz":
        return SubspaceBasis((2,) * n, [ghz(n)])
    raise PreconditionError(f"unknown catalog name {name!r}; choose from {', '.join(NAMES)}")
