"""cisstkit - construct, verify and count completely independent Steiner trees."""

__version__ = "0.1.0"
