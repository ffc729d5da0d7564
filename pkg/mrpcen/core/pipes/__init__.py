from .base_pipe import AsyncPipe, AsyncState, PipeType
from .clip_pipe import CLIP_ERRORS, ClipPipe
from .loggable_pipe import LoggableAsyncPipe

__all__ = [
    "AsyncPipe",
    "AsyncState",
    "PipeType",
    "LoggableAsyncPipe",
    "ClipPipe",
    "CLIP_ERRORS",
]
