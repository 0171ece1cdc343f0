"""sighom - homomorphisms, cores and complexity of signed graphs."""

__version__ = "0.1.0"
