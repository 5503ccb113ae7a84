import fractions
import typing

import humps
import pydantic


class CamelModel(pydantic.BaseModel):
    """Converts fields by default from Python snake_case to JSON camelCase and back.

    Modified from Ahmed Nafies's code for Pydantic 2.0, which renames 'allow_population_by_name' to 'populate_by_name'
    """

    __author__ = "Ahmed Nafies <ahmed.nafies@gmail.com>"
    __copyright__ = "Copyright 2020, Ahmed Nafies"
    __license__ = "MIT"
    __version__ = "1.0.5"

    model_config = pydantic.ConfigDict(
        alias_generator=humps.camelize, populate_by_name=True
    )


def to_fraction(value: typing.Any) -> fractions.Fraction:
    """Accepts ints, Fractions and "a/b" strings. Floats are refused: every
    coordinate in a moment graph is exact."""

    match value:
        case bool():
            raise ValueError("booleans are not rationals")
        case fractions.Fraction():
            return value
        case int():
            return fractions.Fraction(value)
        case str():
            try:
                return fractions.Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"not a rational number: {value!r}")
        case _ if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return fractions.Fraction(int(value.numerator), int(value.denominator))
        case _:
            raise ValueError(f"not a rational number: {value!r}")


def fraction_to_str(value: fractions.Fraction) -> str:
    return str(value)


Rational = typing.Annotated[
    fractions.Fraction,
    pydantic.BeforeValidator(to_fraction),
    pydantic.PlainSerializer(fraction_to_str, return_type=str),
]


class FrozenModel(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)
