import inspect
import types
from functools import wraps
from typing import Any, Tuple, Union, get_args, get_origin, get_type_hints


def _accepted_classes(hint) -> Tuple[type, ...]:
    """
    Reduces a type hint to the runtime classes an argument may be an instance of.

    Subscripted generics are checked against their origin (``List[int]`` -> ``list``), unions against each member,
    and ``float`` also admits ``int`` as PEP 484 allows. ``Any`` yields an empty tuple, meaning "don't check".
    """
    if hint is Any:
        return ()
    origin = get_origin(hint)
    if origin is Union or origin is types.UnionType:
        accepted = []
        for member in get_args(hint):
            member_classes = _accepted_classes(member)
            if not member_classes:
                return ()
            accepted.extend(member_classes)
        return tuple(accepted)
    if origin is not None:
        return (origin,) if isinstance(origin, type) else ()
    if hint is type(None):
        return (type(None),)
    if hint is float:
        return (float, int)
    return (hint,) if isinstance(hint, type) else ()


def _check_arguments(hints: dict, bound: inspect.BoundArguments, skip_first: bool) -> None:
    names = list(bound.signature.parameters)
    if skip_first:
        names = names[1:]

    for name in names:
        if name not in hints or name not in bound.arguments:
            continue
        arg = bound.arguments[name]
        accepted = _accepted_classes(hints[name])
        if not accepted:
            continue
        # bool is an int subclass but never a valid count or coordinate
        if isinstance(arg, bool) and bool not in accepted:
            raise TypeError(f"Argument '{name}'={arg!r} does not match {hints[name]}")
        if not isinstance(arg, accepted):
            raise TypeError(f"Argument '{name}'={arg!r} does not match {hints[name]}")


def _enforce(func, skip_first: bool):
    signature = inspect.signature(func)
    hints = {}

    @wraps(func)
    def wrapper(*args, **kwargs):
        # resolved on first call so annotations may name classes defined later
        if not hints:
            hints.update(get_type_hints(func))
        bound = signature.bind(*args, **kwargs)
        _check_arguments(hints, bound, skip_first=skip_first)
        return func(*args, **kwargs)
    return wrapper


def enforce_types_object(func):
    """Checks the annotated arguments of a method, ignoring ``self``."""
    return _enforce(func, skip_first=True)


def enforce_types_functional(func):
    """Checks the annotated arguments of a plain function."""
    return _enforce(func, skip_first=False)
