"""Model checker: теоремы о basic pairs, проверенные перебором малых моделей."""
from .base import (  # noqa: F401
    CheckReport,
    Counterexample,
    EnumSpec,
    InvalidTopology,
    ModelCheckError,
    SuiteKind,
    UnknownTheorem,
)
from .reporting import render_structured, render_text  # noqa: F401
from .suite import THEOREMS, check_theorem, converse_de_witness, paper_counterexample, run_suite  # noqa: F401
from .topology import FiniteTopology, from_topology, verify_remark  # noqa: F401
