"""Pure-Python universal-coloring kernel (fallback for the compiled one).

A "config" is a tuple of domain positions; a coloring "covers" the pattern
when some config is monochromatic.  The kernel scans all r-colorings of the
domain in odometer order (position 0 = least significant digit) and returns
the index of the first coloring with NO monochromatic config, or -1 when
every coloring has one (the universal check succeeds).

``fix_first`` enumerates only colorings giving position 0 the color 0 — a
sound symmetry reduction for universal checks, since color permutations
preserve monochromatic configs.
"""


def first_uncovered_coloring(domain_size, r, configs, fix_first=True):
    if domain_size == 0:
        return -1 if configs else 0
    if r == 2 and domain_size <= 63:
        return _bitmask_scan(domain_size, configs, fix_first)
    return _odometer_scan(domain_size, r, configs, fix_first)


def _bitmask_scan(domain_size, configs, fix_first):
    masks = [0] * len(configs)
    for i, cfg in enumerate(configs):
        m = 0
        for p in cfg:
            m |= 1 << p
        masks[i] = m
    total = 1 << domain_size
    step = 2 if fix_first else 1
    for c in range(0, total, step):
        for m in masks:
            x = c & m
            if x == 0 or x == m:
                break
        else:
            return c
    return -1


def _odometer_scan(domain_size, r, configs, fix_first):
    colors = [0] * domain_size
    index = 0
    first_cap = 1 if fix_first else r
    while True:
        for cfg in configs:
            c0 = colors[cfg[0]]
            if all(colors[p] == c0 for p in cfg[1:]):
                break
        else:
            return index
        # advance the odometer
        pos = 0
        while pos < domain_size:
            cap = first_cap if pos == 0 else r
            colors[pos] += 1
            if colors[pos] < cap:
                break
            colors[pos] = 0
            pos += 1
        if pos == domain_size:
            return -1
        index = 0
        for p in range(domain_size - 1, -1, -1):
            index = index * r + colors[p]
