"""State-threading action calculus with executable laws and demo pipeline."""

from .core import (
    Action,
    TransferFn,
    ValueStatePair,
    bind,
    compose,
    fmap,
    get,
    identity,
    inject,
    join,
    kleisli,
    put,
    run,
)

__all__ = [
    "Action",
    "TransferFn",
    "ValueStatePair",
    "bind",
    "compose",
    "fmap",
    "get",
    "identity",
    "inject",
    "join",
    "kleisli",
    "put",
    "run",
]
