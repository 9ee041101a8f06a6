"""Label sets shared by the library, reports and the run model."""

PASSED = 'passed'
CHECK_FAILED = 'check-failed'
INPUT_ERROR = 'input-error'

VERDICT_CHOICES = [
    (PASSED, 'Passed'),
    (CHECK_FAILED, 'Check failed'),
    (INPUT_ERROR, 'Input error'),
]

EXIT_CODES = {PASSED: 0, CHECK_FAILED: 1, INPUT_ERROR: 2}

QUANTUM_HOMOGENEOUS_SPACE = 'quantum-homogeneous-space'
QUANTUM_SUBGROUP = 'quantum-subgroup'
NEITHER = 'neither'

QUANTUM_LABEL_CHOICES = [
    (QUANTUM_HOMOGENEOUS_SPACE, 'Quantum homogeneous space'),
    (QUANTUM_SUBGROUP, 'Quantum subgroup'),
    (NEITHER, 'Neither'),
]
