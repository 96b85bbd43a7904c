from . import bbox, bbox_simple, scale, downscale, adapter, monotone  # noqa: F401
