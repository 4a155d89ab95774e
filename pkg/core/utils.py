# core/utils.py
from django.conf import settings
from django.core.cache import cache


def cache_key(prefix, params):
    """Stable cache key built from an endpoint prefix and its validated params."""
    parts = [f"{name}={params[name]}" for name in sorted(params)]
    return f"bernoulli:{prefix}:" + "&".join(parts)


def cached_result(prefix, params, compute):
    """
    Returns the cached payload for (prefix, params), computing and storing it
    on a miss. Payloads must already be JSON-ready.
    """
    key = cache_key(prefix, params)
    payload = cache.get(key)
    if payload is None:
        payload = compute()
        cache.set(key, payload, settings.BERNOULLI['CACHE_TIMEOUT'])
    return payload
