"""Weight schemes over coordinate subsets: product, POD, and general form.

A scheme assigns gamma_u >= 0 to every nonempty subset u of {1, ..., s}
(1-based coordinates, matching the JSON wire format "1,3": 0.5).  The empty
set implicitly carries weight 1 and is never stored.

The central operation is `combine`, the weighted sum

    sum_{nonempty u} gamma_u prod_{j in u} eta_j

for per-coordinate values eta_j, evaluated without subset enumeration for
product weights (a plain product) and POD weights (a dynamic program over
the subset order), and by explicit iteration for general weights.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GuardError

GENERAL_DIM_GUARD = 20


def _subset_key(u: frozenset[int]) -> str:
    return ",".join(str(j) for j in sorted(u))


@dataclass(frozen=True)
class WeightScheme:
    """Weights gamma_u for nonempty u, in product, POD, or general form.

    product: gamma_u = prod_{j in u} gamma[j-1]
    pod:     gamma_u = Gamma[|u|-1] * prod_{j in u} gamma[j-1]
    general: explicit sparse map subset -> weight (absent means 0)
    """

    s: int
    form: str = "product"
    gamma: tuple[float, ...] = ()
    Gamma: tuple[float, ...] = ()
    subsets: dict[frozenset[int], float] = field(default_factory=dict)

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"dimension must be >= 1, got {self.s}")
        if self.form not in ("product", "pod", "general"):
            raise DomainError(f"unknown weight form {self.form!r}")
        if self.form in ("product", "pod"):
            if len(self.gamma) != self.s:
                raise DomainError(f"need {self.s} coordinate weights, got {len(self.gamma)}")
            if any(g < 0 for g in self.gamma):
                raise DomainError("weights must be nonnegative")
        if self.form == "pod":
            if len(self.Gamma) != self.s:
                raise DomainError(f"need {self.s} order weights, got {len(self.Gamma)}")
            if any(g < 0 for g in self.Gamma):
                raise DomainError("weights must be nonnegative")
        if self.form == "general":
            if self.s > GENERAL_DIM_GUARD:
                raise GuardError(f"general weights limited to s <= {GENERAL_DIM_GUARD}")
            for u, g in self.subsets.items():
                if not u or not all(1 <= j <= self.s for j in u):
                    raise DomainError(f"bad subset {sorted(u)} for dimension {self.s}")
                if g < 0:
                    raise DomainError("weights must be nonnegative")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def product(gamma) -> "WeightScheme":
        gamma = tuple(float(g) for g in gamma)
        return WeightScheme(s=len(gamma), form="product", gamma=gamma)

    @staticmethod
    def pod(Gamma, gamma) -> "WeightScheme":
        gamma = tuple(float(g) for g in gamma)
        Gamma = tuple(float(g) for g in Gamma)
        return WeightScheme(s=len(gamma), form="pod", gamma=gamma, Gamma=Gamma)

    @staticmethod
    def general(s: int, subsets: dict) -> "WeightScheme":
        clean = {frozenset(u): float(g) for u, g in subsets.items()}
        return WeightScheme(s=s, form="general", subsets=clean)

    # -- basic queries -----------------------------------------------------

    def weight_of(self, u) -> float:
        """gamma_u for an arbitrary subset of 1..s (empty set -> 1)."""
        u = frozenset(u)
        if not u:
            return 1.0
        if not all(1 <= j <= self.s for j in u):
            raise DomainError(f"subset {sorted(u)} out of range for s={self.s}")
        if self.form == "product":
            out = 1.0
            for j in u:
                out *= self.gamma[j - 1]
            return out
        if self.form == "pod":
            out = self.Gamma[len(u) - 1]
            for j in u:
                out *= self.gamma[j - 1]
            return out
        return self.subsets.get(u, 0.0)

    def nonempty_subsets(self):
        """Iterate (u, gamma_u) over subsets with nonzero stored weight."""
        if self.form == "general":
            for u, g in sorted(self.subsets.items(), key=lambda t: (len(t[0]), sorted(t[0]))):
                if g != 0.0:
                    yield u, g
            return
        if self.s > GENERAL_DIM_GUARD:
            raise GuardError(f"subset iteration limited to s <= {GENERAL_DIM_GUARD}")
        for mask in range(1, 1 << self.s):
            u = frozenset(j + 1 for j in range(self.s) if mask >> j & 1)
            g = self.weight_of(u)
            if g != 0.0:
                yield u, g

    # -- derived schemes ---------------------------------------------------

    def scaled_per_coordinate(self, factor: float) -> "WeightScheme":
        """New scheme with gamma_u * factor^|u| (weight modification maps)."""
        if self.form == "product":
            return WeightScheme.product([g * factor for g in self.gamma])
        if self.form == "pod":
            return WeightScheme.pod(self.Gamma, [g * factor for g in self.gamma])
        return WeightScheme.general(
            self.s, {u: g * factor ** len(u) for u, g in self.subsets.items()}
        )

    def powered(self, p: float) -> "WeightScheme":
        """New scheme with gamma_u^p (POD and product forms are closed under this)."""
        if self.form == "product":
            return WeightScheme.product([g**p for g in self.gamma])
        if self.form == "pod":
            return WeightScheme.pod([g**p for g in self.Gamma], [g**p for g in self.gamma])
        return WeightScheme.general(self.s, {u: g**p for u, g in self.subsets.items()})

    def sqrt(self) -> "WeightScheme":
        return self.powered(0.5)

    # -- the workhorse -----------------------------------------------------

    def combine(self, eta: np.ndarray) -> np.ndarray:
        """sum_{nonempty u} gamma_u prod_{j in u} eta[..., j-1].

        eta has shape (..., s); the reduction runs over the last axis.
        Product weights cost O(s), POD O(s^2), general O(2^s) (guarded).
        """
        eta = np.asarray(eta, dtype=float)
        if eta.shape[-1] != self.s:
            raise DomainError(f"eta last axis {eta.shape[-1]} != s={self.s}")
        if self.form == "product":
            g = np.asarray(self.gamma)
            return np.prod(1.0 + g * eta, axis=-1) - 1.0
        if self.form == "pod":
            base = eta.shape[:-1]
            elem = np.zeros((self.s + 1,) + base)
            elem[0] = 1.0
            for j in range(self.s):
                v = self.gamma[j] * eta[..., j]
                top = min(j + 1, self.s)
                for order in range(top, 0, -1):
                    elem[order] = elem[order] + v * elem[order - 1]
            out = np.zeros(base)
            for order in range(1, self.s + 1):
                out = out + self.Gamma[order - 1] * elem[order]
            return out
        out = np.zeros(eta.shape[:-1])
        for u, g in self.nonempty_subsets():
            term = np.ones(eta.shape[:-1])
            for j in u:
                term = term * eta[..., j - 1]
            out = out + g * term
        return out

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        out: dict = {"form": self.form}
        if self.form in ("product", "pod"):
            out["gamma"] = list(self.gamma)
        if self.form == "pod":
            out["Gamma"] = list(self.Gamma)
        if self.form == "general":
            out["s"] = self.s
            out["subsets"] = {_subset_key(u): g for u, g in self.subsets.items()}
        return out

    @staticmethod
    def from_dict(data: dict) -> "WeightScheme":
        form = data.get("form")
        if form == "product":
            return WeightScheme.product(data["gamma"])
        if form == "pod":
            return WeightScheme.pod(data["Gamma"], data["gamma"])
        if form == "general":
            subsets = {
                frozenset(int(t) for t in key.split(",")): float(g)
                for key, g in data["subsets"].items()
            }
            s = int(data.get("s") or max((max(u) for u in subsets), default=1))
            return WeightScheme.general(s, subsets)
        raise DomainError(f"unknown weight form {form!r}")

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(text: str) -> "WeightScheme":
        return WeightScheme.from_dict(json.loads(text))
