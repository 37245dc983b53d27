#!/usr/bin/env python3
"""
Test script for the order-kind and determinant-method registry.

Usage:
    python3 tests/test_registry.py

    Or from project root:
    python3 -m pytest tests/test_registry.py
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from construct import classify
from models.registry import (
    DET_REGISTRY,
    ORDER_REGISTRY,
    DetMethod,
    OrderKind,
    det_methods_help,
    get_det_metadata,
    get_det_methods,
    get_order_metadata,
)


def test_order_kinds():
    """Test order kind registry."""
    print("=" * 80)
    print("Testing Order Kind Registry")
    print("=" * 80)

    for kind in ORDER_REGISTRY:
        metadata = get_order_metadata(kind)
        assert metadata.kind == kind
        print(f"✓ {metadata.display_name} ({kind.value}): {metadata.guarantee}")

    # classify() and the registry agree on which orders admit singular matrices
    assert classify(22).singular_possible  # 45 = 3^2 * 5
    assert not classify(13).singular_possible  # 27 = 3^3
    assert not classify(7).singular_possible  # 15 = 3 * 5
    print()


def test_det_methods():
    """Test determinant method registry."""
    print("=" * 80)
    print("Testing Determinant Method Registry")
    print("=" * 80)

    methods = get_det_methods()
    assert [m.value for m in methods] == ["resultant", "elimination", "both"]
    assert not get_det_metadata(DetMethod.RESULTANT).bounded
    assert get_det_metadata(DetMethod.ELIMINATION).bounded
    assert get_det_metadata(DetMethod.BOTH).bounded
    for method in methods:
        print(f"✓ {method.value}: {get_det_metadata(method).description}")
    print()


def test_det_methods_help():
    text = det_methods_help()
    for method in DET_REGISTRY:
        assert f"{method.value}: " in text


def test_enum_usage():
    """Enums compare equal to their string values."""
    assert OrderKind.COMPOSITE == "composite"
    assert DetMethod("elimination") is DetMethod.ELIMINATION
    assert get_order_metadata(OrderKind.TWO_PRIMES).display_name == "Product of two primes"


if __name__ == "__main__":
    print()
    test_order_kinds()
    test_det_methods()
    test_det_methods_help()
    test_enum_usage()
    print("=" * 80)
    print("All Registry Tests Complete!")
    print("=" * 80)
    print()
    print("Summary:")
    print(f"  - {len(ORDER_REGISTRY)} order kinds registered")
    print(f"  - {len(get_det_methods())} determinant methods registered")
    print()
