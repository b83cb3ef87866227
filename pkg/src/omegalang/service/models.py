"""Request and response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

LANGUAGES = ("enw", "balanced", "omega", "grammar-enw", "grammar-balanced")


class CheckRequest(BaseModel):
    language: str = Field(description=f"one of {', '.join(LANGUAGES)}")
    word: str = ""


class CheckResponse(BaseModel):
    language: str
    word_length: int
    member: bool
    height: int | None = None
    z_count: int | None = None


class GenerateRequest(BaseModel):
    z_count: int = Field(ge=2)
    all_words: bool = False


class GenerateResponse(BaseModel):
    z_count: int
    count: int
    words: list[str]


class CountRequest(BaseModel):
    kind: str = Field(description="enw-leaves or omega")
    value: int


class CountResponse(BaseModel):
    kind: str
    value: int
    enumerated: int
    formula: int | None = None


class DissectRequest(BaseModel):
    builtin: str | None = Field(default=None, description="pow2, pow3 or fib")
    lengths: list[int] | None = None
    ratio: str = "2"
    cap: str = Field(description="decimal or a^b")


class WitnessRequest(BaseModel):
    z_count: int = Field(ge=2)
    g: int = Field(ge=1)


class WitnessResponse(BaseModel):
    z_count: int
    g: int
    member: bool
    word: str | None = None
    height: int | None = None


class GrammarResponse(BaseModel):
    name: str
    bnf: str
