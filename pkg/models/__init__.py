"""Models and registries for circulantlab."""

from .registry import (
    OrderKind,
    DetMethod,
    OrderKindMetadata,
    DetMethodMetadata,
    ORDER_REGISTRY,
    DET_REGISTRY,
    get_det_methods,
    get_order_metadata,
    get_det_metadata,
    det_methods_help,
)

__all__ = [
    "OrderKind",
    "DetMethod",
    "OrderKindMetadata",
    "DetMethodMetadata",
    "ORDER_REGISTRY",
    "DET_REGISTRY",
    "get_det_methods",
    "get_order_metadata",
    "get_det_metadata",
    "det_methods_help",
]
