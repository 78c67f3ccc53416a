"""
Abstract base class for enum-driven dispatch services.

The pattern:
1. An enum names the alternatives (here: the eight exponent cases)
2. A dispatch table maps each enum member to a handler
3. ``_determine_strategy`` picks the member for an input
4. ``dispatch`` looks up the handler and calls it

Example:
    class Parity(Enum):
        EVEN = "even"
        ODD = "odd"

    class ParityService(EnumDispatchService[Parity]):
        def __init__(self):
            super().__init__()
            self._register_handlers({
                Parity.EVEN: self._handle_even,
                Parity.ODD: self._handle_odd,
            })

        def _determine_strategy(self, value, **kwargs) -> Parity:
            return Parity.EVEN if value % 2 == 0 else Parity.ODD
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable, Dict, Generic, TypeVar

logger = logging.getLogger(__name__)

StrategyEnum = TypeVar("StrategyEnum", bound=Enum)


class EnumDispatchService(ABC, Generic[StrategyEnum]):
    """
    Base class for services that route an input to one handler per enum member.

    Subclasses register their handlers in ``__init__`` and implement
    ``_determine_strategy``.
    """

    def __init__(self):
        self._handlers: Dict[StrategyEnum, Callable[..., Any]] = {}

    def _register_handlers(self, handlers: Dict[StrategyEnum, Callable[..., Any]]) -> None:
        """
        Register strategy handlers.

        Args:
            handlers: Mapping from enum member to handler

        Raises:
            ValueError: If ``handlers`` is empty
        """
        if not handlers:
            raise ValueError(f"{self.__class__.__name__}: Handler registry cannot be empty")
        self._handlers = dict(handlers)
        logger.debug(f"{self.__class__.__name__}: Registered {len(handlers)} handlers")

    @abstractmethod
    def _determine_strategy(self, context: Any, **kwargs) -> StrategyEnum:
        """Return the enum member whose handler should process ``context``."""

    def dispatch(self, context: Any, **kwargs) -> Any:
        """
        Route ``context`` to its handler.

        Args:
            context: Primary input, passed to the handler as its only positional argument
            **kwargs: Forwarded to the handler

        Returns:
            Whatever the handler returns

        Raises:
            KeyError: If the determined strategy has no registered handler
        """
        strategy = self._determine_strategy(context, **kwargs)
        if strategy not in self._handlers:
            raise KeyError(
                f"{self.__class__.__name__}: No handler registered for strategy {strategy}. "
                f"Available strategies: {list(self._handlers.keys())}"
            )
        logger.debug(f"{self.__class__.__name__}: Dispatching to {strategy.value} handler")
        return self._handlers[strategy](context, **kwargs)

    def get_registered_strategies(self) -> list[StrategyEnum]:
        return list(self._handlers.keys())

    def has_strategy(self, strategy: StrategyEnum) -> bool:
        return strategy in self._handlers
