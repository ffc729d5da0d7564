import os

import numpy as np
import pytest

from mrpcen import (
    AnnotationFormatError,
    ArgError,
    Event,
    EventList,
    SegmentCounts,
    bootstrap_evaluate,
    bootstrap_summary,
    compute_metrics,
    read_event_csv,
    segment_counts,
    segmentize,
    threshold_detector,
    write_event_csv,
    write_replicates_csv,
)

VOCABULARY = ["bird", "car"]


def _events(*events, duration=4.0, vocabulary=VOCABULARY):
    return EventList(
        events=[Event(onset=a, offset=b, label=c) for a, b, c in events],
        duration=duration,
        vocabulary=vocabulary,
    )


def test_segmentize_marks_overlaps():
    activity = segmentize(
        _events((0.5, 1.0, "bird"), (2.9, 3.1, "car")), 1.0
    )
    assert activity.shape == (2, 4)
    np.testing.assert_array_equal(
        activity,
        [[True, False, False, False], [False, False, True, True]],
    )


def test_segment_count_rounding():
    assert segmentize(_events(duration=0.3), 0.1).shape == (2, 3)
    assert segmentize(_events(duration=0.35), 0.1).shape == (2, 4)


def test_event_validation():
    with pytest.raises(ValueError):
        Event(onset=1.0, offset=1.0, label="bird")
    with pytest.raises(ValueError):
        _events((0.0, 1.0, "plane"))
    with pytest.raises(ValueError):
        _events((0.0, 5.0, "bird"))


def test_two_out_of_three():
    ref = _events((0.0, 3.0, "bird"))
    est = _events((0.0, 2.0, "bird"), (3.0, 4.0, "bird"))
    report = compute_metrics(segment_counts(ref, est, 1.0))
    bird = report.class_wise["bird"]
    assert (bird.tp, bird.fp, bird.fn) == (2, 1, 1)
    assert report.precision == pytest.approx(2 / 3)
    assert report.recall == pytest.approx(2 / 3)
    assert report.f1 == pytest.approx(2 / 3)
    assert report.error_rate == pytest.approx(2 / 3)
    assert report.deletion_rate == pytest.approx(1 / 3)
    assert report.insertion_rate == pytest.approx(1 / 3)


def test_perfect_match():
    ref = _events((0.2, 1.5, "bird"), (2.0, 3.7, "car"))
    report = compute_metrics(segment_counts(ref, ref, 1.0))
    assert report.precision == report.recall == report.f1 == 1.0
    assert report.error_rate == 0.0
    assert report.n_ref == 4


def test_substitution():
    ref = _events((0.0, 1.0, "bird"))
    est = _events((0.0, 1.0, "car"))
    report = compute_metrics(segment_counts(ref, est, 1.0))
    assert report.substitution_rate == 1.0
    assert report.deletion_rate == 0.0
    assert report.insertion_rate == 0.0
    assert report.error_rate == 1.0


def test_no_reference_activity():
    report = compute_metrics(segment_counts(_events(), _events(), 1.0))
    assert report.error_rate is None
    assert report.f1 == 0.0


def test_mismatched_inputs():
    with pytest.raises(ArgError):
        segment_counts(_events(), _events(duration=5.0))
    with pytest.raises(ArgError):
        segment_counts(_events(), _events(vocabulary=["bird"]))


def test_micro_f1_is_harmonic_mean():
    rng = np.random.default_rng(0)
    for _ in range(100):
        tp, fp, fn = rng.integers(0, 20, size=(3, 3))
        counts = SegmentCounts(
            classes=["a", "b", "c"],
            tp=tp,
            fp=fp,
            fn=fn,
            segment_fn=[fn.sum()],
            segment_fp=[fp.sum()],
            segment_n_ref=[tp.sum() + fn.sum()],
            segment_n_est=[tp.sum() + fp.sum()],
            segment_length=1.0,
        )
        report = compute_metrics(counts)
        p, r = report.precision, report.recall
        if p + r > 0:
            assert report.f1 == pytest.approx(2 * p * r / (p + r))


def test_merge_pools_counts():
    a = segment_counts(_events((0.0, 1.0, "bird")), _events(), 1.0)
    b = segment_counts(_events(), _events((1.0, 2.0, "car")), 1.0)
    merged = SegmentCounts.merge([a, b])
    assert merged.n_segments == 8
    assert merged.fn.tolist() == [1, 0]
    assert merged.fp.tolist() == [0, 1]


def _per_clip_counts(n_clips=8):
    rng = np.random.default_rng(1)
    counts = []
    for _ in range(n_clips):
        onset = float(rng.uniform(0.0, 2.0))
        ref = _events((onset, onset + 1.0, "bird"))
        est = _events((onset + 0.6, onset + 1.8, "bird"))
        counts.append(segment_counts(ref, est, 0.5))
    return counts


def test_bootstrap_is_deterministic():
    counts = _per_clip_counts()
    first = bootstrap_evaluate(counts, n_samples=100, n_reps=100, seed=3)
    second = bootstrap_evaluate(counts, n_samples=100, n_reps=100, seed=3)
    assert len(first) == 100
    assert [r.f1 for r in first] == [r.f1 for r in second]
    other = bootstrap_evaluate(counts, n_samples=100, n_reps=100, seed=4)
    assert [r.f1 for r in first] != [r.f1 for r in other]


def test_bootstrap_single_clip_is_constant():
    counts = _per_clip_counts(n_clips=1)
    reports = bootstrap_evaluate(counts, n_samples=10, n_reps=20, seed=0)
    assert len({r.f1 for r in reports}) == 1
    summary = bootstrap_summary(reports)
    f1 = summary.metrics["f1"]
    assert f1.lower == f1.upper == pytest.approx(f1.mean)
    assert f1.n == 20


def test_bootstrap_rejects_bad_arguments():
    with pytest.raises(ArgError):
        bootstrap_evaluate([], n_samples=1, n_reps=1)
    with pytest.raises(ArgError):
        bootstrap_evaluate(_per_clip_counts(), n_samples=0, n_reps=1)


def test_replicates_csv(tmp_path):
    reports = bootstrap_evaluate(_per_clip_counts(), 10, 5, seed=0)
    path = os.path.join(tmp_path, "replicates.csv")
    write_replicates_csv(path, reports)
    with open(path) as f:
        lines = f.read().splitlines()
    assert lines[0].split(",")[:3] == ["precision", "recall", "f1"]
    assert len(lines) == 6


def test_event_csv_roundtrip(tmp_path):
    events = _events((0.1, 0.25, "bird"), (1.0, 3.5, "car"))
    path = os.path.join(tmp_path, "events.csv")
    write_event_csv(path, events)
    assert read_event_csv(path, VOCABULARY, 4.0) == events


def test_event_csv_errors(tmp_path):
    path = os.path.join(tmp_path, "bad.csv")
    with open(path, "w") as f:
        f.write("start,end,class\n0.0,1.0,bird\n")
    with pytest.raises(AnnotationFormatError):
        read_event_csv(path, VOCABULARY, 4.0)
    with open(path, "w") as f:
        f.write("onset,offset,label\n0.0,1.0,plane\n")
    with pytest.raises(AnnotationFormatError):
        read_event_csv(path, VOCABULARY, 4.0)
    with open(path, "w") as f:
        f.write("onset,offset,label\n0.0,bird\n")
    with pytest.raises(AnnotationFormatError):
        read_event_csv(path, VOCABULARY, 4.0)
    with pytest.raises(AnnotationFormatError):
        read_event_csv(os.path.join(tmp_path, "none.csv"), VOCABULARY, 4.0)


def test_threshold_detector():
    values = np.zeros((4, 40))
    values[0:2, 5:15] = 1.0
    detected = threshold_detector(
        values,
        VOCABULARY,
        {"bird": (0, 2), "car": (2, 4)},
        threshold=0.5,
        frame_rate=10.0,
    )
    assert detected.duration == pytest.approx(4.0)
    assert detected.events == [Event(onset=0.5, offset=1.5, label="bird")]


def test_threshold_detector_skips_unmapped_classes():
    values = np.ones((4, 10, 2))
    detected = threshold_detector(
        values, VOCABULARY, {"car": (1, 3)}, 0.5, frame_rate=10.0
    )
    assert [e.label for e in detected.events] == ["car"]
    assert detected.events[0].offset == pytest.approx(1.0)


def test_threshold_detector_band_range_errors():
    with pytest.raises(ArgError):
        threshold_detector(
            np.ones((4, 10)), VOCABULARY, {"bird": (2, 6)}, 0.5, 10.0
        )
    with pytest.raises(ArgError):
        threshold_detector(np.ones((4, 10)), VOCABULARY, {}, 0.5)


def test_segmentize_partial_last_segment():
    events = _events((0.0, 2.5, "siren"), duration=10.0, vocabulary=["siren"])
    activity = segmentize(events, 1.0)
    assert activity.shape == (1, 10)
    np.testing.assert_array_equal(np.flatnonzero(activity[0]), [0, 1, 2])
    across = _events((0.5, 1.5, "bird"), duration=3.0)
    np.testing.assert_array_equal(segmentize(across, 1.0)[0], [1, 1, 0])


def test_shifted_estimate_counts():
    ref = _events((0.0, 3.0, "bird"))
    est = _events((1.0, 4.0, "bird"))
    counts = segment_counts(ref, est, 1.0)
    assert (counts.tp[0], counts.fp[0], counts.fn[0]) == (2, 1, 1)
    empty = segment_counts(ref, _events(), 1.0)
    assert (empty.tp[0], empty.fp[0], empty.fn[0]) == (0, 0, 3)


def test_detector_finds_a_known_block():
    frame_rate = 50.0
    features = np.zeros((8, 400))
    features[2:4, 100:200] = 1.0
    events = threshold_detector(
        features,
        VOCABULARY,
        {"bird": (2, 4), "car": (5, 8)},
        threshold=0.5,
        frame_rate=frame_rate,
    )
    assert [(e.onset, e.offset, e.label) for e in events.events] == [
        (2.0, 4.0, "bird")
    ]
    assert events.duration == pytest.approx(8.0)


def test_detector_edge_cases():
    band_ranges = {"bird": (0, 2)}
    silent = threshold_detector(
        np.zeros((2, 50)), VOCABULARY, band_ranges, 0.5, frame_rate=10.0
    )
    assert len(silent) == 0
    loud = threshold_detector(
        np.ones((2, 50)), VOCABULARY, band_ranges, 0.5, frame_rate=10.0
    )
    assert [(e.onset, e.offset) for e in loud.events] == [(0.0, 5.0)]


def _random_events(rng, duration=4.0, max_events=3):
    events = []
    for label in VOCABULARY:
        for _ in range(int(rng.integers(0, max_events + 1))):
            onset = float(rng.uniform(0.0, duration - 0.5))
            offset = min(onset + float(rng.uniform(0.1, 1.5)), duration)
            events.append((onset, offset, label))
    return _events(*events, duration=duration)


def test_swapping_reference_and_estimate():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a, b = _random_events(rng), _random_events(rng)
        forward = segment_counts(a, b, 0.5)
        backward = segment_counts(b, a, 0.5)
        np.testing.assert_array_equal(forward.tp, backward.tp)
        np.testing.assert_array_equal(forward.fp, backward.fn)
        np.testing.assert_array_equal(forward.fn, backward.fp)
        report, swapped = compute_metrics(forward), compute_metrics(backward)
        assert report.precision == pytest.approx(swapped.recall)
        assert report.recall == pytest.approx(swapped.precision)
        assert report.f1 == pytest.approx(swapped.f1)


def test_adding_a_correct_event_never_lowers_f1():
    rng = np.random.default_rng(8)
    for _ in range(50):
        ref, est = _random_events(rng), _random_events(rng)
        if not ref.events:
            continue
        before = compute_metrics(segment_counts(ref, est, 0.5)).f1
        hit = ref.events[int(rng.integers(0, len(ref.events)))]
        improved = EventList(
            events=[*est.events, hit],
            duration=est.duration,
            vocabulary=est.vocabulary,
        )
        after = compute_metrics(segment_counts(ref, improved, 0.5)).f1
        assert after >= before


def test_error_rate_is_zero_only_for_identical_activity():
    rng = np.random.default_rng(9)
    for _ in range(50):
        ref, est = _random_events(rng), _random_events(rng)
        if not ref.events:
            continue
        assert compute_metrics(segment_counts(ref, ref, 0.5)).error_rate == 0
        identical = np.array_equal(segmentize(ref, 0.5), segmentize(est, 0.5))
        error_rate = compute_metrics(segment_counts(ref, est, 0.5)).error_rate
        assert (error_rate == 0) == identical


def test_bootstrap_mean_f1_tracks_pooled_f1():
    rng = np.random.default_rng(10)
    counts = [
        segment_counts(_random_events(rng), _random_events(rng), 0.5)
        for _ in range(40)
    ]
    pooled = compute_metrics(SegmentCounts.merge(counts)).f1
    reports = bootstrap_evaluate(
        counts, n_samples=len(counts), n_reps=200, seed=0
    )
    mean_f1 = bootstrap_summary(reports).metrics["f1"].mean
    assert mean_f1 == pytest.approx(pooled, rel=0.05)
