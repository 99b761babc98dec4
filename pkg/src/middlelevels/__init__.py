"""Cyclic star-transposition Gray codes for (n+1, n+1)-combinations."""
from .engine import Emission, GenState, catalan_mod, classify_step, count, generate, init, next
from .errors import MiddleLevelsError
from .oracle import VerifyReport, verify_ordering
from .switching import SwitchPlan, plan_switches

__all__ = [
    "Emission", "GenState", "MiddleLevelsError", "SwitchPlan", "VerifyReport",
    "catalan_mod", "classify_step", "count", "generate", "init", "next",
    "plan_switches", "verify_ordering",
]
