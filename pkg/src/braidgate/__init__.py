"""Yang-Baxter entanglers and Segre-ideal separability tests for multi-qubit pure states."""

from .braid import (
    BraidWord,
    TwoStrandOperator,
    braid_relation_residuals,
    represent_word,
    tau_generator,
    ybe_residual,
)
from .entangler import (
    EntanglerOperator,
    NonUnitaryPhaseError,
    PhaseVector,
    apply,
    multi_qubit_r,
    phase_gate_tau,
    r_from_m,
    swap_p,
    two_qubit_r,
    unitarity_residual,
)
from .oracle import FactorizationResult, dense_reference_apply, purity_concurrence_2q, try_factor
from .qstate import (
    InvalidLabelError,
    PureState,
    ghz_state,
    index_to_label,
    label_to_index,
    product_state,
    proportional,
    tensor_product,
    uniform_product,
    w_state,
)
from .segre import (
    Flattening,
    GeneratorReport,
    concurrence_2q,
    flattening,
    is_fully_separable,
    is_j_separable,
    measure_3q,
    measure_mq,
    minors_2x2,
    segre_generators,
)

__version__ = "0.1.0"
