"""
Hook Schur modules over F_p.

This package contains:
- HookShape: the partition (a, 1^b)
- HookModule / SchurElement: S_(a,1^b)(V) as a cokernel with normal forms
- FrobeniusSubquotient: S^p_lambda(V)
- eta_isomorphism: S_(m/p-i,1^i)(V) -> S^p_(m-i,1^i)(V)
- semistandard tableaux: the brute-force dimension oracle
"""

from src.schur.frobenius import (
    EtaIsomorphism,
    FrobeniusSubquotient,
    eta_isomorphism,
    eta_isomorphism_for,
    frobenius_subquotient,
)
from src.schur.hook_module import (
    HookModule,
    SchurElement,
    build_hook_module,
    character,
    normal_form,
    straighten_exponent,
    tautological_koszul_check,
)
from src.schur.shapes import HookShape
from src.schur.tableaux import semistandard_tableaux, tableau_content, tableau_count

__all__ = [
    "EtaIsomorphism",
    "FrobeniusSubquotient",
    "HookModule",
    "HookShape",
    "SchurElement",
    "build_hook_module",
    "character",
    "eta_isomorphism",
    "eta_isomorphism_for",
    "frobenius_subquotient",
    "normal_form",
    "semistandard_tableaux",
    "straighten_exponent",
    "tableau_content",
    "tableau_count",
    "tautological_koszul_check",
]
