"""
Loading classes by their dotted paths.
"""

import inspect
import importlib
from pkgutil import iter_modules


def class_from_path(path, base=None):
    """
    Get a class from its dotted path.

    Args:
        path: (str) "package.module.ClassName".
        base: (class) when given, the class must derive from it.

    Returns:
        class
    """
    if "." not in path:
        raise ValueError("'%s' is not a dotted class path." % path)
    module_path, class_name = path.rsplit(".", 1)

    cls = getattr(importlib.import_module(module_path), class_name)
    if not inspect.isclass(cls):
        raise TypeError("'%s' is not a class." % path)
    if base is not None and not issubclass(cls, base):
        raise TypeError("'%s' does not derive from %s." % (path, base.__name__))
    return cls


def iter_package_modules(path):
    """
    Import a package and every module below it, depth first in name order.
    """
    package = importlib.import_module(path)
    yield package
    if not hasattr(package, "__path__"):
        return

    for _, name, is_package in sorted(iter_modules(package.__path__), key=lambda item: item[1]):
        full_path = "%s.%s" % (path, name)
        if is_package:
            yield from iter_package_modules(full_path)
        else:
            yield importlib.import_module(full_path)


def classes_in_path(path, cls):
    """
    The subclasses of cls defined in the modules under path. A class
    imported into another module is yielded once, from its own module.

    Args:
        path: (str) dotted package path.
        cls: (class) the base class, never yielded itself.
    """
    for module in iter_package_modules(path):
        for obj in vars(module).values():
            if inspect.isclass(obj) and issubclass(obj, cls) and obj is not cls \
                    and obj.__module__ == module.__name__:
                yield obj
