"""mbd_modular: exact solving, thresholds and strategies for the biased
Maker-Breaker domination game on small graphs. See README.md for usage."""
__all__ = [
    "graphs", "generators", "invariants", "io", "census", "config", "errors",
    "game", "solver", "thresholds", "domination", "stars", "strategies", "battery",
]
