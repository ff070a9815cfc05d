"""Unsupervised extractive summarization by simulating working-memory
reading over proposition trees, with soft-budget sentence selection and
redundancy metrics."""

__version__ = "0.1.0"
