from concurrent.futures import ThreadPoolExecutor


def ordered_map(fn, items, workers: int = 1) -> list:
    """``list(map(fn, items))``, optionally on a thread pool; result order is input order."""
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
