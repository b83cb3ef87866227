"""HTTP facade over the library.

Every endpoint is a thin translation layer: parse the request model, call
the one library function that does the work, shape the response.  Domain
errors (ValueError and subclasses) map to 400 with the library's message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from ..core_words import height, parse_word
from ..dissection import (
    BUILTIN_LANGUAGES,
    UnaryLanguage,
    dissect_geometric,
    parse_cap,
    parse_ratio,
    residue_dissector,
    witness,
)
from ..grammar_engine import balanced_grammar, bnf_text, enw_grammar, recognize
from ..omega import MAX_ENUM_WORDS, construct_omega, count_omega, enumerate_omega
from ..recognizers import catalan, enumerate_enw, is_balanced, is_enw
from ..omega import is_omega
from .models import (
    LANGUAGES,
    CheckRequest,
    CheckResponse,
    CountRequest,
    CountResponse,
    DissectRequest,
    GenerateRequest,
    GenerateResponse,
    GrammarResponse,
    WitnessRequest,
    WitnessResponse,
)

app = FastAPI(title="omegalang", version="0.1.0")


@app.exception_handler(ValueError)
def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    w = parse_word(req.word)
    if req.language == "enw":
        member = is_enw(w)
    elif req.language == "balanced":
        member = is_balanced(w)
    elif req.language == "omega":
        member = is_omega(w)
    elif req.language == "grammar-enw":
        member = recognize(enw_grammar(), w).accepted
    elif req.language == "grammar-balanced":
        member = recognize(balanced_grammar(), w).accepted
    else:
        raise ValueError(f"unknown language {req.language!r}; use one of {', '.join(LANGUAGES)}")
    resp = CheckResponse(language=req.language, word_length=len(w), member=member)
    if req.language == "omega" and member:
        resp.height = height(w)
        resp.z_count = w.count("z")
    return resp


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    if not req.all_words:
        word = construct_omega(req.z_count)
        return GenerateResponse(z_count=req.z_count, count=1, words=[word])
    total = count_omega(req.z_count)
    if total > MAX_ENUM_WORDS:
        raise ValueError(
            f"{total} words with z-count {req.z_count} exceed the enumeration limit {MAX_ENUM_WORDS}"
        )
    words = sorted(enumerate_omega(req.z_count))
    return GenerateResponse(z_count=req.z_count, count=len(words), words=words)


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    if req.kind == "enw-leaves":
        if not 2 <= req.value <= 8:
            raise ValueError("leaf counts 2..8 are supported")
        enumerated = len(enumerate_enw(req.value))
        formula = (1 << req.value) * catalan(req.value - 1)
        return CountResponse(kind=req.kind, value=req.value, enumerated=enumerated, formula=formula)
    if req.kind == "omega":
        total = count_omega(req.value)
        if total > MAX_ENUM_WORDS:
            raise ValueError(
                f"{total} words with z-count {req.value} exceed the enumeration limit {MAX_ENUM_WORDS}"
            )
        return CountResponse(kind=req.kind, value=req.value, enumerated=len(enumerate_omega(req.value)))
    raise ValueError(f"unknown count kind {req.kind!r}; use enw-leaves or omega")


@app.post("/dissect")
def dissect(req: DissectRequest) -> Response:
    if (req.builtin is None) == (req.lengths is None):
        raise ValueError("provide exactly one of builtin or lengths")
    if req.builtin is not None:
        try:
            lang = BUILTIN_LANGUAGES[req.builtin]()
        except KeyError:
            raise ValueError(
                f"unknown builtin {req.builtin!r}; use one of {', '.join(sorted(BUILTIN_LANGUAGES))}"
            ) from None
    else:
        lang = UnaryLanguage.explicit(req.lengths)
    report = dissect_geometric(lang, parse_ratio(req.ratio), parse_cap(req.cap))
    # the report serializes big lengths as decimal strings; emit its JSON verbatim
    return Response(content=report.to_json(), media_type="application/json")


@app.post("/witness", response_model=WitnessResponse)
def witness_endpoint(req: WitnessRequest) -> WitnessResponse:
    w = witness(req.z_count, residue_dissector(req.g))
    resp = WitnessResponse(z_count=req.z_count, g=req.g, member=w is not None)
    if w is not None:
        resp.word = w
        resp.height = height(w)
    return resp


@app.get("/grammars", response_model=list[GrammarResponse])
def grammars() -> list[GrammarResponse]:
    return [
        GrammarResponse(name="enw", bnf=bnf_text(enw_grammar())),
        GrammarResponse(name="balanced", bnf=bnf_text(balanced_grammar())),
    ]
