"""
Freeness certificates - verdict, exponents, basis and obstruction of a freeness decision
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence

if TYPE_CHECKING:
    from hyperfree.derivations.fields import VectorField


class FreenessStatus(str, Enum):
    """Verdict of a freeness decision"""

    FREE = "Free"
    NOT_FREE = "NotFree"
    UNKNOWN = "Unknown"


class CertificateMethod(str, Enum):
    """Which criterion produced the verdict"""

    RANK_LE_2 = "rank<=2"
    SAITO = "saito-basis"
    CHAR3 = "char3"
    B2 = "b2-highrank"
    CHAR4 = "char4-local"
    DISPATCH = "dispatch"


@dataclass
class FreenessCertificate:
    """
    Outcome of a freeness test

    Attributes:
        status: Free, NotFree or Unknown
        method: Criterion that decided
        exponents: Sorted exponents when Free (or the tested candidate degrees)
        basis: Optional basis of D(A, m)
        obstruction: b2 minus the product sum, or a cokernel dimension
        failure: Name of the failing condition for NotFree-by-basis results
        notes: Free-form remarks (budgets hit, pivots tried)
    """

    status: FreenessStatus
    method: CertificateMethod
    exponents: Optional[List[int]] = None
    basis: Optional[List["VectorField"]] = None
    obstruction: Optional[int] = None
    failure: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.exponents is not None:
            self.exponents = sorted(int(e) for e in self.exponents)

    @property
    def is_free(self) -> bool:
        return self.status == FreenessStatus.FREE

    def validate(self, weight: Optional[int] = None) -> bool:
        """
        Check the internal consistency of the certificate

        Args:
            weight: |m| (or |A|) that free exponents must sum to

        Raises:
            ValueError: If an invariant fails
        """
        if self.status == FreenessStatus.FREE:
            if self.exponents is None:
                raise ValueError("Free certificate without exponents")
            if weight is not None and sum(self.exponents) != weight:
                raise ValueError(
                    f"Exponents {self.exponents} do not sum to {weight}"
                )
        if (
            self.status == FreenessStatus.NOT_FREE
            and self.method in (CertificateMethod.CHAR3, CertificateMethod.B2)
            and not (self.obstruction and self.obstruction > 0)
        ):
            raise ValueError("NotFree via a b2 criterion needs a positive obstruction")
        return True

    def with_padding(self, zeros: int) -> "FreenessCertificate":
        """Prepend `zeros` zero exponents (for split-off center directions)"""
        if not zeros or self.exponents is None:
            return self
        return FreenessCertificate(
            status=self.status,
            method=self.method,
            exponents=[0] * zeros + list(self.exponents),
            basis=None,
            obstruction=self.obstruction,
            failure=self.failure,
            notes=self.notes + [f"padded with {zeros} zero exponents for the center"],
        )

    def to_dict(self, names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "method": self.method.value,
            "exponents": self.exponents,
            "basis": [b.format(names) for b in self.basis] if self.basis else None,
            "obstruction": self.obstruction,
        }

    def details(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.failure:
            out["failure"] = self.failure
        if self.notes:
            out["notes"] = list(self.notes)
        return out
