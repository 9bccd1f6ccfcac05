"""UML class diagrams with CRUD operations to MVC 2 web controller models."""

from mvc2gen.crud import build_crud_module, transform
from mvc2gen.errors import Mvc2GenError, Violation
from mvc2gen.pim import UmlModel, all_method_defs, validate_pim
from mvc2gen.psm import StrutsModel, fragment_path, resolve_fragment, validate_psm

__all__ = [
    "Mvc2GenError",
    "StrutsModel",
    "UmlModel",
    "Violation",
    "all_method_defs",
    "build_crud_module",
    "fragment_path",
    "resolve_fragment",
    "transform",
    "validate_pim",
    "validate_psm",
]
