import time
from collections import defaultdict
from fractions import Fraction

import numpy as np
import pytest

from src.domain.bounding_box_domain import BoundingBox
from src.domain.dataset_domain import GroundTruthAnnotation
from src.domain.detection_domain import Detection
from src.domain.evaluation_domain import IouThreshold, MatchVerdict
from src.dto.request.evaluation_config_dto import EvaluationConfigDto
from src.dto.request.nms_config_dto import NmsConfigDto
from src.enum.evaluation_enums import ApInterpolationEnum
from src.exception.config_exceptions import ConfigException, RegistryMismatchException
from src.exception.evaluation_exceptions import ClassSkippedException, EvalException, PartitionException
from src.exception.io_exceptions import UnknownImageException

ORACLE_CLASSES = ["c0", "c1", "c2"]


def det(box, score, class_id=0, image_id="a"):
    return Detection(image_id=image_id, class_id=class_id, box=BoundingBox(*box), score=score, model_id="m")


def gt(box, class_id=0, image_id="a"):
    return GroundTruthAnnotation(image_id=image_id, class_id=class_id, box=BoundingBox(*box))


def verdict(index, score, is_tp):
    return MatchVerdict(detection_index=index, image_id="a", score=score, is_tp=is_tp)


def exact_iou(a, b):
    ax, ay, aw, ah = (Fraction(v) for v in a)
    bx, by, bw, bh = (Fraction(v) for v in b)
    iw = min(ax + aw, bx + bw) - max(ax, bx)
    ih = min(ay + ah, by + bh) - max(ay, by)
    if iw <= 0 or ih <= 0:
        return Fraction(0)
    inter = iw * ih
    return inter / (aw * ah + bw * bh - inter)


def oracle_map(images, annotations, records, threshold, n_classes):
    """
    유리수 연산으로 매칭과 PR 곡선의 모든 prefix를 직접 계산하는 기준 구현.
    records: [(image_id, class_id, box, score)] (파일 순서)
    """
    threshold = Fraction(threshold)
    verdicts = defaultdict(list)
    n_gt = defaultdict(int)
    for image_id, _, _ in images:
        for class_id in range(n_classes):
            gts = [box for i, c, box in annotations if i == image_id and c == class_id]
            n_gt[class_id] += len(gts)
            dets = [(index, r) for index, r in enumerate(records) if r[0] == image_id and r[1] == class_id]
            dets.sort(key=lambda item: (-item[1][3], item[0]))
            used = [False] * len(gts)
            for index, (_, _, box, score) in dets:
                best, best_j = Fraction(-1), None
                for j, g in enumerate(gts):
                    if used[j]:
                        continue
                    overlap = exact_iou(box, g)
                    if overlap > best:
                        best, best_j = overlap, j
                is_tp = best_j is not None and best >= threshold
                if is_tp:
                    used[best_j] = True
                verdicts[class_id].append((-score, image_id, index, is_tp))

    aps = []
    for class_id in range(n_classes):
        if n_gt[class_id] == 0:
            continue
        ordered = [v[3] for v in sorted(verdicts[class_id])]
        precisions, tp_count = [], 0
        for k, is_tp in enumerate(ordered, start=1):
            tp_count += is_tp
            precisions.append(Fraction(tp_count, k))
        ap = Fraction(0)
        for k, is_tp in enumerate(ordered):
            if is_tp:
                ap += max(precisions[k:]) / n_gt[class_id]
        aps.append(ap)
    return sum(aps, Fraction(0)) / len(aps)


class TestMatch:

    def test_identical_detection_is_tp(self, evaluation_service):
        result = evaluation_service.match([det((0, 0, 10, 10), 0.5)], [gt((0, 0, 10, 10))], IouThreshold(0.75))
        assert result.verdicts[0].is_tp and result.verdicts[0].gt_index == 0
        assert result.gt_matched == (True,)

    def test_annotation_is_used_once(self, evaluation_service):
        result = evaluation_service.match(
            [det((0, 0, 10, 10), 0.8), det((0, 0, 10, 10), 0.9)], [gt((0, 0, 10, 10))], IouThreshold(0.5),
        )
        assert [(v.detection_index, v.is_tp) for v in result.verdicts] == [(1, True), (0, False)]

    def test_threshold_comparison(self, evaluation_service):
        detections, annotations = [det((0, 0, 10, 10), 0.9)], [gt((0, 0, 4, 10))]
        assert not evaluation_service.match(detections, annotations, IouThreshold(0.5)).verdicts[0].is_tp
        assert evaluation_service.match(detections, annotations, IouThreshold(0.25)).verdicts[0].is_tp

    def test_best_unmatched_annotation_wins(self, evaluation_service):
        result = evaluation_service.match(
            [det((0, 0, 10, 10), 0.9)], [gt((2, 0, 10, 10)), gt((0, 0, 10, 10))], IouThreshold(0.5),
        )
        assert result.verdicts[0].gt_index == 1

    def test_no_annotations_means_false_positive(self, evaluation_service):
        result = evaluation_service.match([det((0, 0, 10, 10), 0.9)], [], IouThreshold(0.5))
        assert not result.verdicts[0].is_tp

    def test_mixed_partitions_rejected(self, evaluation_service):
        with pytest.raises(PartitionException):
            evaluation_service.match([det((0, 0, 1, 1), 0.5, class_id=1)], [gt((0, 0, 1, 1), class_id=0)], IouThreshold(0.5))

    @pytest.mark.parametrize("value", [0.0, 1.5, float("nan")])
    def test_threshold_range(self, value):
        with pytest.raises(ConfigException):
            IouThreshold(value)


class TestAveragePrecision:

    def test_perfect_curve(self, evaluation_service):
        assert evaluation_service.average_precision([verdict(0, 0.9, True), verdict(1, 0.8, True)], 2) == 1.0

    def test_no_detections(self, evaluation_service):
        assert evaluation_service.average_precision([], 3) == 0.0

    def test_hand_computed_curve(self, evaluation_service):
        verdicts = [verdict(0, 0.9, True), verdict(1, 0.8, False), verdict(2, 0.7, True)]
        assert evaluation_service.average_precision(verdicts, 2) == pytest.approx(5 / 6, abs=1e-9)

    def test_missing_annotations_skip_the_class(self, evaluation_service):
        with pytest.raises(ClassSkippedException):
            evaluation_service.average_precision([verdict(0, 0.9, False)], 0)

    def test_coco_101_perfect(self, evaluation_service):
        verdicts = [verdict(i, 1.0, True) for i in range(7)]
        assert evaluation_service.average_precision(verdicts, 7, ApInterpolationEnum.COCO_101) == 1.0

    def test_coco_101_half_recall(self, evaluation_service):
        # recall 0.5에서 멈추면 0.00~0.50의 51개 샘플만 precision 1
        verdicts = [verdict(0, 0.9, True)]
        assert evaluation_service.average_precision(verdicts, 2, ApInterpolationEnum.COCO_101) == pytest.approx(51 / 101)


class TestEvaluate:

    @pytest.mark.parametrize("n_images", [1, 17, 500])
    def test_perfect_detector(self, evaluation_service, make_manifest, make_detections, n_images):
        rng = np.random.default_rng(n_images)
        images = [(f"img{i}", 64, 64) for i in range(n_images)]
        annotations = []
        for image_id, _, _ in images:
            for _ in range(int(rng.integers(1, 4))):
                x, y = (int(v) for v in rng.integers(0, 40, size=2))
                annotations.append((image_id, int(rng.integers(0, 8)), (x, y, int(rng.integers(1, 24)), int(rng.integers(1, 24)))))
        manifest = make_manifest(images, annotations)
        detections = make_detections("perfect", [(i, c, box, 1.0) for i, c, box in annotations])

        report = evaluation_service.evaluate(detections, manifest)
        assert [t.threshold for t in report.thresholds] == [0.25, 0.5, 0.75]
        assert all(t.map_value == 1.0 for t in report.thresholds)
        assert all(t.fp == 0 for t in report.thresholds)

    def test_empty_detection_file(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 10, 10)], [("a", 0, (0, 0, 5, 5))])
        report = evaluation_service.evaluate(make_detections("none", []), manifest)
        assert [t.map_value for t in report.thresholds] == [0.0, 0.0, 0.0]

    def test_classes_without_annotations_are_excluded(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 100, 100)], [("a", 0, (0, 0, 10, 10))])
        detections = make_detections("m", [("a", 0, (0, 0, 10, 10), 0.9), ("a", 3, (50, 50, 10, 10), 0.8)])
        evaluation = evaluation_service.evaluate(detections, manifest).thresholds[0]
        assert evaluation.map_value == 1.0
        assert evaluation.classes[3].ap is None and evaluation.classes[3].fp == 1

    def test_empty_ground_truth(self, evaluation_service, make_manifest, make_detections):
        with pytest.raises(EvalException):
            evaluation_service.evaluate(make_detections("m", []), make_manifest([("a", 10, 10)]))

    def test_unknown_image(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 10, 10)], [("a", 0, (0, 0, 5, 5))])
        with pytest.raises(UnknownImageException):
            evaluation_service.evaluate(make_detections("m", [("b", 0, (0, 0, 5, 5), 0.5)]), manifest)

    def test_registry_mismatch(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 10, 10)], [("a", 0, (0, 0, 5, 5))])
        with pytest.raises(RegistryMismatchException):
            evaluation_service.evaluate(make_detections("m", [], names=["x"]), manifest)

    def test_default_config_hash_is_stable(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 10, 10)], [("a", 0, (0, 0, 5, 5))])
        detections = make_detections("m", [("a", 0, (0, 0, 5, 5), 0.5)])
        first = evaluation_service.evaluate(detections, manifest)
        second = evaluation_service.evaluate(detections, manifest, EvaluationConfigDto())
        assert first == second
        assert len(first.config_hash) == 64

    def test_nms_before_evaluation(self, evaluation_service, make_manifest, make_detections):
        manifest = make_manifest([("a", 100, 100)], [("a", 0, (0, 0, 10, 10))])
        detections = make_detections("m", [("a", 0, (0, 0, 10, 10), 0.9), ("a", 0, (1, 0, 10, 10), 0.8)])
        plain = evaluation_service.evaluate(detections, manifest).thresholds[1]
        with_nms = evaluation_service.evaluate(detections, manifest, EvaluationConfigDto(nms=NmsConfigDto())).thresholds[1]
        assert (plain.fp, with_nms.fp) == (1, 0)

    def test_monotone_score_transform(self, evaluation_service, make_manifest, make_detections):
        for seed in range(200):
            manifest, records = self.random_case(np.random.default_rng(seed), make_manifest)
            before = evaluation_service.evaluate(make_detections("m", records, ORACLE_CLASSES), manifest)
            halved = [(i, c, box, s / 2) for i, c, box, s in records]
            after = evaluation_service.evaluate(make_detections("m", halved, ORACLE_CLASSES), manifest)
            assert [t.map_value for t in before.thresholds] == [t.map_value for t in after.thresholds]

    def test_duplicate_detection_does_not_raise_ap(self, evaluation_service, make_manifest, make_detections):
        # 정답끼리 멀리 떨어져 있어 중복 검출은 다른 정답과 매칭될 수 없음
        annotations = [("a", 0, (20 * k, 0, 10, 10)) for k in range(5)]
        manifest = make_manifest([("a", 100, 20)], annotations)
        for seed in range(200):
            rng = np.random.default_rng(seed)
            records = [("a", 0, (20 * int(rng.integers(0, 5)) + int(rng.integers(0, 4)), int(rng.integers(0, 4)), 10, 10),
                        round(float(rng.random()), 1)) for _ in range(int(rng.integers(1, 7)))]
            base = evaluation_service.evaluate(make_detections("m", records), manifest)
            copy = records[int(rng.integers(0, len(records)))]
            duplicated = evaluation_service.evaluate(make_detections("m", records + [copy]), manifest)
            for b, d in zip(base.thresholds, duplicated.thresholds):
                assert d.map_value <= b.map_value

    @staticmethod
    def random_case(rng, make_manifest):
        images = [(f"img{i}", 20, 20) for i in range(int(rng.integers(1, 6)))]

        def random_box():
            x, y = (int(v) for v in rng.integers(0, 12, size=2))
            return x, y, int(rng.integers(1, 9)), int(rng.integers(1, 9))

        annotations = [
            (images[int(rng.integers(0, len(images)))][0], int(rng.integers(0, 3)), random_box())
            for _ in range(int(rng.integers(1, 11)))
        ]
        records = [
            (images[int(rng.integers(0, len(images)))][0], int(rng.integers(0, 3)), random_box(),
             round(float(rng.random()), 1))
            for _ in range(int(rng.integers(0, 11)))
        ]
        return make_manifest(images, annotations, ORACLE_CLASSES), records

    def test_matches_exact_rational_oracle(self, evaluation_service, make_manifest, make_detections):
        for seed in range(1000):
            manifest, records = self.random_case(np.random.default_rng(seed), make_manifest)
            report = evaluation_service.evaluate(make_detections("m", records, ORACLE_CLASSES), manifest)
            images = [(i.image_id, i.width, i.height) for i in manifest.images]
            annotations = [(a.image_id, a.class_id, a.box.as_list()) for a in manifest.annotations]
            for evaluation in report.thresholds:
                expected = oracle_map(images, annotations, records, evaluation.threshold, len(ORACLE_CLASSES))
                assert abs(evaluation.map_value - float(expected)) <= 1e-9, f"seed={seed} t={evaluation.threshold}"


def test_evaluates_dataset_scale_input_within_a_second(evaluation_service, make_manifest, make_detections):
    rng = np.random.default_rng(2532)
    images = [(f"img{i:04d}", 512, 512) for i in range(2532)]
    annotations = []
    for image_id, _, _ in images:
        for _ in range(12):
            x, y = (int(v) for v in rng.integers(0, 448, size=2))
            w, h = (int(v) for v in rng.integers(8, 64, size=2))
            annotations.append((image_id, int(rng.integers(0, 8)), (x, y, w, h)))
    picks = rng.choice(len(annotations), size=10_000, replace=False)
    records = []
    for k in picks:
        image_id, class_id, (x, y, w, h) = annotations[int(k)]
        records.append((image_id, class_id, (x + int(rng.integers(0, 4)), y, w, h), float(rng.random())))
    manifest = make_manifest(images, annotations)
    detections = make_detections("m", records)

    started = time.perf_counter()
    report = evaluation_service.evaluate(detections, manifest)
    elapsed = time.perf_counter() - started

    assert [t.threshold for t in report.thresholds] == [0.25, 0.5, 0.75]
    assert elapsed < 1.0
