from .segment_eval import SegmentEvalProvider

__all__ = ["SegmentEvalProvider"]
