from .base import GroupAction, GroupFamily
from .closure import CustomGroup, GeneratedGroup, close_under_product
from .cyclic import CyclicShiftGroup, build_cyclic_shift
from .dihedral import DihedralGroup, build_dihedral
from .sign_flip import SignFlipGroup, build_sign_flip
from .verification import CheckResult, VerificationReport, verify_group

# Group family registry, keyed by the "type" field of a group spec
AVAILABLE_GROUPS = {
    'cyclic': CyclicShiftGroup,
    'sign_flip': SignFlipGroup,
    'dihedral': DihedralGroup,
    'custom': CustomGroup,
    'generated': GeneratedGroup
}

__all__ = [
    'GroupAction',
    'GroupFamily',
    'CyclicShiftGroup',
    'SignFlipGroup',
    'DihedralGroup',
    'CustomGroup',
    'GeneratedGroup',
    'AVAILABLE_GROUPS',
    'build_cyclic_shift',
    'build_sign_flip',
    'build_dihedral',
    'close_under_product',
    'verify_group',
    'VerificationReport',
    'CheckResult',
]
