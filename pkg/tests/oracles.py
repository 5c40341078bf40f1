"""Independent reference computations used by the tests."""


def murnaghan_nakayama(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """Symmetric-group character via border-strip removal on beta-sets."""
    if not cycles:
        return 1 if sum(shape) == 0 else 0
    k, rest = cycles[0], cycles[1:]
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in beta:
            continue
        sign = (-1) ** sum(1 for x in beta if c < x < b)
        new = sorted([x for x in beta if x != b] + [c], reverse=True)
        parts = tuple(p for p in (new[i] - (length - 1 - i) for i in range(length)) if p > 0)
        total += sign * murnaghan_nakayama(parts, rest)
    return total
