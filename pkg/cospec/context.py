"""Search settings and the context manager that scopes them."""

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Any, Iterator, Optional

from cospec.exceptions import ConfigurationError

WORKERS_ENV = "COSPEC_WORKERS"


@dataclass(frozen=True)
class SearchSettings:
    """
    Limits and execution options read by every size check and search.

    Attributes:
        workers: Default worker process count for enumeration
        max_vertices: Largest graph any constructor accepts
        max_enum_vertices: Largest vertex count for exhaustive enumeration
        max_sachs_vertices: Largest graph for the elementary-subgraph expansion
        progress: Show tqdm progress bars over enumeration work units
    """

    workers: int = 1
    max_vertices: int = 64
    max_enum_vertices: int = 16
    max_sachs_vertices: int = 24
    progress: bool = False

    def __post_init__(self) -> None:
        for name in ("workers", "max_vertices", "max_enum_vertices", "max_sachs_vertices"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigurationError(name, value, "must be a positive integer")


def settings_from_env() -> SearchSettings:
    """
    Build default settings, honouring ``COSPEC_WORKERS``.

    Raises:
        ConfigurationError: If the variable is not a positive integer
    """
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or raw.strip() == "":
        return SearchSettings()
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigurationError(WORKERS_ENV, raw, "must be a positive integer") from None
    return SearchSettings(workers=workers)


class SearchContext:
    """
    Context manager for temporarily overriding search settings.

    Examples:
        >>> with SearchContext(workers=4, max_vertices=256):
        ...     report = cospectral_mates(target)
    """

    _current: Optional[SearchSettings] = None

    def __init__(self, **overrides: Any):
        """
        Initialize context with setting overrides.

        Args:
            **overrides: Any field of SearchSettings
        """
        unknown = set(overrides) - set(SearchSettings.__dataclass_fields__)
        if unknown:
            name = sorted(unknown)[0]
            raise ConfigurationError(name, overrides[name], "unknown setting")
        self.settings = replace(get_settings(), **overrides)
        self._previous: Optional[SearchSettings] = None

    def __enter__(self) -> 'SearchContext':
        """Enter the context."""
        self._previous = SearchContext._current
        SearchContext._current = self.settings
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Exit the context."""
        SearchContext._current = self._previous

    @classmethod
    def get_current_settings(cls) -> Optional[SearchSettings]:
        """Get the settings installed by the innermost active context."""
        return cls._current


def get_settings() -> SearchSettings:
    """Return the active settings: the innermost context, else the environment."""
    current = SearchContext.get_current_settings()
    return current if current is not None else settings_from_env()


@contextmanager
def search_settings(**overrides: Any) -> Iterator[SearchSettings]:
    """
    Context manager for temporarily overriding search settings.

    Args:
        **overrides: Any field of SearchSettings

    Examples:
        >>> with search_settings(max_vertices=256) as active:
        ...     big = gen_A_construction(100)
    """
    ctx = SearchContext(**overrides)
    with ctx:
        yield ctx.settings
