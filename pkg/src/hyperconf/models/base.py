"""
Base model for option objects built by library callers.

Field and model validation failures surface as the toolkit's own
:class:`~hyperconf.exceptions.errors.ValidationException` subclasses rather
than pydantic's ``ValidationError``.
"""

from typing import Any, ClassVar, Type

from pydantic import BaseModel, ValidationError

from hyperconf.exceptions.errors import InvalidParams, ValidationException


class CheckedModel(BaseModel):
    """BaseModel raising ``error_class`` when construction fails validation."""

    error_class: ClassVar[Type[ValidationException]] = InvalidParams

    def __init__(self, **data: Any) -> None:
        try:
            super().__init__(**data)
        except ValidationError as e:
            errors = [
                {"loc": ".".join(str(part) for part in err["loc"]), "msg": err["msg"]}
                for err in e.errors()
            ]
            summary = "; ".join(f"{err['loc'] or 'model'}: {err['msg']}" for err in errors)
            raise self.error_class(
                f"Invalid {type(self).__name__}: {summary}", details={"errors": errors}
            ) from e
