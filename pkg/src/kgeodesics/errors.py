"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can emit
``{code, message, context}`` JSON without inspecting exception types.
"""

from __future__ import annotations


class GeodesicError(Exception):
    code = "error"

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "context": self.context}


class WordSyntaxError(GeodesicError, ValueError):
    code = "syntax"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", position=position, text=text)
        self.position = position


class TrivialWordError(GeodesicError, ValueError):
    code = "trivial_word"


class SingleFamilyError(GeodesicError, ValueError):
    code = "single_family"


class NonPrimitiveError(GeodesicError, ValueError):
    code = "non_primitive"


class NonHyperbolicError(GeodesicError, ValueError):
    code = "non_hyperbolic"


class IndeterminateSeparationError(GeodesicError, ArithmeticError):
    code = "indeterminate_separation"


class ConstructionError(GeodesicError, RuntimeError):
    code = "construction_failure"
