#!/usr/bin/env python3
"""
Deterministic chunked execution for the brute-force enumerations.

Work is split into contiguous chunks and the per-chunk results are returned in
chunk order, so callers see the same output for every worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from .logging_config import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_chunks(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """Split a sequence into at most ``parts`` contiguous non-empty slices."""
    if not items:
        return []
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks = []
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return chunks


def chunked_map(func: Callable[[Sequence[T]], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply ``func`` to contiguous chunks of ``items``.

    Args:
        func: Callable taking one chunk
        items: The full work list
        workers: Thread budget; 1 runs inline

    Returns:
        One result per chunk, in chunk order
    """
    if workers <= 1 or len(items) < 2:
        return [func(items)] if items else []

    chunks = split_chunks(items, workers)
    logger.debug(f"Dispatching {len(items)} items in {len(chunks)} chunks")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, chunks))


def range_chunks(total: int, parts: int) -> List[range]:
    """Split ``range(total)`` into contiguous sub-ranges."""
    return [range(chunk.start, chunk.stop) for chunk in split_chunks(range(total), parts)]
