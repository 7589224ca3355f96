"""Exception taxonomy.

``InputError`` subclasses signal invalid or rejected input (CLI exit code 2).
``ContractViolation`` subclasses signal that an internally checked identity
failed, which would contradict a proved statement; they are bug detectors
(CLI exit code 1 for the specialization propagation check, otherwise fatal).
"""


class DualsignError(Exception):
    pass


class InputError(DualsignError):
    pass


class ContractViolation(DualsignError):
    pass


# fields / linalg
class EvenCharacteristic(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class IrreducibilityUnverified(InputError):
    """Degree too high for the built-in checks and no certificate supplied."""


class DimensionMismatch(InputError):
    pass


# groups / representations
class NotAGroup(InputError):
    pass


class NotAnInvolution(InputError):
    pass


class NonMultiplicativeCharacter(InputError):
    pass


class IncompatibleCharacter(InputError):
    pass


class NotAHomomorphism(InputError):
    pass


class NotAbsolutelyIrreducible(InputError):
    pass


class NotPolarized(InputError):
    pass


class AmbiguousIntertwiner(ContractViolation):
    """Solution space of the intertwiner system has dimension >= 2."""


class DuplicateFactor(InputError):
    pass


class NotASubgroup(InputError):
    pass


class NotInvolutionStable(InputError):
    pass


# symplectic descent / semidirect extension
class NotAntisymmetric(InputError):
    pass


class RelationFails(InputError):
    pass


class NonDiagonalizableInvolution(InputError):
    pass


class HomomorphismFails(InputError):
    pass


class WitnessInvalid(InputError):
    pass


# DVR specialization
class NotIntegral(InputError):
    pass


class ModularCharacteristic(InputError):
    pass


class NotMultiplicityFree(InputError):
    pass


class SplitFailed(InputError):
    """The residual / generic splitting machinery could not separate factors."""


class NotResiduallyIdempotent(InputError):
    pass


class NotTauFixed(InputError):
    pass


class NotSymmetricWitness(InputError):
    pass


class PrecisionExhausted(ContractViolation):
    pass


class PropagationViolation(ContractViolation):
    """Generic fiber good but residual fiber not good: contradicts specialization."""


# weight/slope combinatorics
class IndexOutOfRange(InputError):
    pass


class TooLarge(InputError):
    pass


class InvalidWeights(InputError):
    pass


class AmbiguousMatching(InputError):
    pass


class NotTransitive(InputError):
    pass


class OddDimension(InputError):
    pass


class AutoChoiceFailed(InputError):
    pass
