"""Standing pulses and SLEP stability for a three-component reaction-diffusion system."""

__version__ = "0.1.0"
