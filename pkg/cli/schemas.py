from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CyclotomicOut(BaseModel):
    n: int
    degree: int
    polynomial: str = Field(..., description="Canonical text form")
    coefficients: List[str] = Field(..., description="Decimal coefficients, index = exponent")


class CheckOut(BaseModel):
    n: int
    singular: bool
    witnesses: List[int] = Field(..., description="Divisors d of n with Phi_d | f")
    weight: int


class DetOut(BaseModel):
    n: int
    method: str
    resultant: Optional[str] = None
    elimination: Optional[str] = None


class DecomposeOut(BaseModel):
    n: int
    parts: Dict[str, List[str]] = Field(..., description="Prime p -> coefficients of h_{n/p}")
    uniformized: Optional[bool] = None
    unital: bool


class ConstructOut(BaseModel):
    n: int
    p: int
    q: int
    r: int
    a: int
    b: int
    R_a: List[int]
    support: List[int]
    singular: bool = True


class CensusOut(BaseModel):
    n: int
    k: int
    count_phi_n: str
    count_phi_sub: str
    count_both: str
    total: str
    universe: str
    probability: str = Field(..., description="Exact fraction total/universe")
    probability_decimal: str = Field(..., description="Rounded to 4 significant figures")
    experimental: bool = False
    verified: Optional[bool] = None


class SampleOut(BaseModel):
    n: int
    k: int
    trials: int
    hits: int
    seed: int
    rate: str
