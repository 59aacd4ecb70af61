import sys
import logging
from typing import Optional
from logging import Logger, Formatter, StreamHandler
from signedflow.errors import ConfigurationError
from signedflow.config import LimitsConfig, EngineConfig, CacheConfig, DEFAULT_LIMITS, DEFAULT_ENGINE
from signedflow.types import TCache

DEFAULT_LOG_FORMAT = "[%(asctime)s] %(levelname)s %(filename)s:%(lineno)d %(message)s"


class Context:

    _log: Logger
    _cache: Optional[TCache] = None
    _limits: LimitsConfig
    _engine: EngineConfig

    def __init__(self):
        self.setup_logging()
        self._limits = LimitsConfig(**DEFAULT_LIMITS)
        self._engine = EngineConfig(**DEFAULT_ENGINE)

    @property
    def cache(self) -> TCache:
        from signedflow.cache import NoCache
        if self._cache is None:
            self.setup_cache(NoCache())
        return self._cache

    @property
    def log(self) -> Logger:
        return self._log

    @property
    def limits(self) -> LimitsConfig:
        return self._limits

    @property
    def engine(self) -> EngineConfig:
        return self._engine

    def setup_logging(self, *, level: int = logging.WARNING, fmt: str = DEFAULT_LOG_FORMAT):
        logger = logging.getLogger(__name__)
        logger.propagate = False
        logger.setLevel(level)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
        log_format = Formatter(fmt)
        # stdout is reserved for machine output of the cli
        handler = StreamHandler(stream=sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(log_format)
        logger.addHandler(handler)
        self._log = logger

    def setup_cache(self, engine: TCache):
        engine.initialise()
        self._cache = engine

    def setup_cache_from_config(self, cfg: CacheConfig):
        from signedflow.cache import CACHE_ENGINE_MAP
        name = cfg.get("engine")
        if name not in CACHE_ENGINE_MAP:
            raise ConfigurationError(f"invalid cache engine \"{name}\"")
        self.setup_cache(CACHE_ENGINE_MAP[name]())

    def setup_limits(self, cfg: LimitsConfig):
        limits = LimitsConfig(**DEFAULT_LIMITS)
        for key, value in cfg.items():
            if key not in DEFAULT_LIMITS:
                raise ConfigurationError(f"unknown limit \"{key}\"")
            if not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"limit \"{key}\" must be a positive integer")
            limits[key] = value
        self._limits = limits

    def setup_engine(self, cfg: EngineConfig):
        engine = EngineConfig(**DEFAULT_ENGINE)
        for key, value in cfg.items():
            if key not in DEFAULT_ENGINE:
                raise ConfigurationError(f"unknown engine option \"{key}\"")
            engine[key] = value
        self._engine = engine


ctx = Context()
