def sets(*specs):
    """``sets("ad", "abcdf")`` -> list of frozensets; "" is the empty set."""
    return [frozenset(s) for s in specs]


def fam(*specs):
    return frozenset(sets(*specs))
