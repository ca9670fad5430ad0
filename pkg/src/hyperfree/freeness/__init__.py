"""
Freeness - decision procedures with certificates and the identities free arrangements satisfy
"""

from hyperfree.certificates import CertificateMethod, FreenessCertificate, FreenessStatus
from hyperfree.freeness.criteria import (
    ConeForm,
    free_test,
    free_test_at,
    free_test_highrank,
    free_test_rank3,
    local_freeness,
    locally_free_along,
    multi_free_search,
    reduced_charpoly,
)
from hyperfree.freeness.identities import (
    chern_relation_check,
    solomon_terao_free,
    terao_factor_check,
)

__all__ = [
    "CertificateMethod",
    "ConeForm",
    "FreenessCertificate",
    "FreenessStatus",
    "chern_relation_check",
    "free_test",
    "free_test_at",
    "free_test_highrank",
    "free_test_rank3",
    "local_freeness",
    "locally_free_along",
    "multi_free_search",
    "reduced_charpoly",
    "solomon_terao_free",
    "terao_factor_check",
]
