"""
Exact integer readings of the formulas the algorithms are parameterized with
"""
from math import isqrt


def lg(x: int) -> int:
    """
    max(1, ceil(log2(x))), exact for every positive integer
    """
    if x < 1:
        raise ValueError(f"lg is only defined for positive integers, got {x}")
    return max(1, (x - 1).bit_length())


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_sqrt(numerator: int, denominator: int = 1) -> int:
    """
    ceil(sqrt(numerator / denominator)) for non-negative integers
    """
    # k >= sqrt(q) iff k*k >= ceil(q) since k*k is an integer
    c = ceil_div(numerator, denominator)
    if c <= 0:
        return 0
    return isqrt(c - 1) + 1


def clamp(value: int, low: int, high: int) -> int:
    return max(low, min(high, value))


def strip_count(n: int, s: int) -> int:
    """
    m = ceil((n/s) * lg n), the strip count of the direct algorithms
    """
    return max(1, ceil_div(n * lg(n), s))


def strip_capacity(n: int, s: int) -> int:
    """
    ceil(s / lg n) records per strip
    """
    return max(1, ceil_div(s, lg(n)))
