"""Small shared helpers."""

from __future__ import annotations

from functools import wraps


def memo(fn):
    """Memoize a function of an immutable structure on that structure.

    Results are stored in the first argument's instance dict, so they are
    private to that object and die with it. Recomputing always yields the
    same value, which keeps concurrent evaluation benign.
    """
    key = fn.__module__ + "." + fn.__qualname__

    @wraps(fn)
    def wrapper(obj, *args, **kwargs):
        cache = obj.__dict__.get("_memo")
        if cache is None:
            cache = {}
            object.__setattr__(obj, "_memo", cache)
        k = (key, args, tuple(sorted(kwargs.items())))
        if k not in cache:
            cache[k] = fn(obj, *args, **kwargs)
        return cache[k]

    return wrapper
