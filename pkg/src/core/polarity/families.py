"""Chain k-gon cactus families and their parameter bundle."""

from enum import Enum

from pydantic import BaseModel, Field, ValidationError, model_validator

from src.core.errors import InvalidSpecError


class Family(str, Enum):
    """Chain k-gon cactus families."""

    CHAIN_TYPE_1 = "chain1"  # shared cut vertices, adjacent on each gon
    CHAIN_TYPE_2 = "chain2"  # shared cut vertices, at least two apart
    ORTHO_CHAIN = "ortho"  # chain1 with every cut vertex expanded to a bridge
    META_CHAIN = "meta"  # chain2 with every cut vertex expanded to a bridge

    @property
    def min_k(self) -> int:
        return 4 if self.uses_offset else 3

    @property
    def uses_offset(self) -> bool:
        return self in (Family.CHAIN_TYPE_2, Family.META_CHAIN)

    @property
    def shares_cut_vertices(self) -> bool:
        return self in (Family.CHAIN_TYPE_1, Family.CHAIN_TYPE_2)


class FamilySpec(BaseModel):
    """One chain cactus: ``h`` gons of size ``k`` linked in a row."""

    family: Family = Field(description="Chain family")
    k: int = Field(ge=3, description="Gon size")
    h: int = Field(ge=1, description="Number of gons")
    offset: int | None = Field(
        default=None,
        description="Separation of the two attachment vertices on an inner gon "
        "(chain2/meta only, 2 <= offset <= k - 2, default k // 2)",
    )

    model_config = {"extra": "forbid", "frozen": True}

    @model_validator(mode="after")
    def _check_family(self) -> "FamilySpec":
        if self.k < self.family.min_k:
            raise ValueError(
                f"{self.family.value} needs k >= {self.family.min_k}, got k={self.k}"
            )
        if self.offset is not None:
            if not self.family.uses_offset:
                raise ValueError(f"{self.family.value} takes no offset")
            if not 2 <= self.offset <= self.k - 2:
                raise ValueError(
                    f"offset must lie in [2, {self.k - 2}] for k={self.k}, got {self.offset}"
                )
        return self

    @property
    def attachment_offset(self) -> int:
        """Position of the outgoing attachment vertex on each gon."""
        if not self.family.uses_offset:
            return 1
        return self.offset if self.offset is not None else self.k // 2

    def label(self) -> str:
        text = f"{self.family.value} k={self.k} h={self.h}"
        if self.family.uses_offset:
            text += f" offset={self.attachment_offset}"
        return text


def parse_family_spec(
    family: Family | str, k: int, h: int, offset: int | None = None
) -> FamilySpec:
    """
    Build a FamilySpec, converting validation failures into InvalidSpecError.

    Raises:
        InvalidSpecError: Unknown family or parameters outside its domain
    """
    try:
        return FamilySpec(family=family, k=k, h=h, offset=offset)
    except ValidationError as exc:
        raise InvalidSpecError(_first_message(exc)) from exc


def legal_offsets(family: Family, k: int) -> list[int | None]:
    """Offsets worth enumerating for a family (``[None]`` when it takes none)."""
    if not family.uses_offset:
        return [None]
    return list(range(2, k - 1))


def _first_message(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"])
    message = error["msg"].removeprefix("Value error, ")
    return f"{location}: {message}" if location else message
