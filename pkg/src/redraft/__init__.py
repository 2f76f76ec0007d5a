"""Pre-submission data-quality feedback.

Structured fields are validated against declared constraints; free-form text
runs through segment -> predict -> explain: topic-based segmentation, random
forest quality prediction, and responsibility-ranked prescriptive feedback.
"""

__version__ = "0.1.0"
