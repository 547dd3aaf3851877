import itertools
from collections import Counter, defaultdict
from fractions import Fraction

import numpy as np
import pytest

from src.domain.bounding_box_domain import BoundingBox
from src.domain.detection_domain import ENSEMBLE_MODEL_ID, Detection
from src.domain.fused_group_domain import FusedGroup
from src.dto.request.ensemble_config_dto import EnsembleConfigDto
from src.dto.request.nms_config_dto import NmsConfigDto
from src.enum.ensemble_enums import VotingStrategyEnum
from src.exception.config_exceptions import ConfigException, RegistryMismatchException

IMAGES = [(f"img{i}", 40, 40) for i in range(5)]


def det(box, score, model_id, class_id=0, image_id="img0"):
    return Detection(image_id=image_id, class_id=class_id, box=BoundingBox(*box), score=score, model_id=model_id)


def group_of(*members):
    return FusedGroup(members=tuple(members))


def key(detection):
    return detection.image_id, detection.class_id, detection.box, detection.score, detection.model_id


def random_records(rng, n_max=8):
    records = []
    for _ in range(int(rng.integers(0, n_max + 1))):
        x, y = (int(v) for v in rng.integers(0, 25, size=2))
        w, h = (int(v) for v in rng.integers(2, 15, size=2))
        records.append((f"img{int(rng.integers(0, 3))}", int(rng.integers(0, 2)), (x, y, w, h), round(float(rng.random()), 2)))
    return records


class TestGrouping:

    def test_singleton_group(self, ensemble_service, make_detections):
        a = make_detections("A", [("img0", 0, (0, 0, 10, 10), 0.9)])
        groups = ensemble_service.group_detections([a], "img0", 0, 0.5)
        assert len(groups) == 1
        assert groups[0].supporting_models == {"A"}
        assert groups[0].fused is None

    def test_identical_boxes_share_a_group(self, ensemble_service, make_detections):
        a = make_detections("A", [("img0", 0, (0, 0, 10, 10), 0.9)])
        b = make_detections("B", [("img0", 0, (0, 0, 10, 10), 0.2)])
        groups = ensemble_service.group_detections([a, b], "img0", 0, 1.0)
        assert [g.supporting_models for g in groups] == [{"A", "B"}]

    def test_far_box_starts_new_group(self, ensemble_service, make_detections):
        a = make_detections("A", [("img0", 0, (0, 0, 10, 10), 0.9)])
        b = make_detections("B", [("img0", 0, (0, 0, 10, 10), 0.8), ("img0", 0, (50, 50, 10, 10), 0.7)])
        groups = ensemble_service.group_detections([a, b], "img0", 0, 0.5)
        assert [[m.score for m in g.members] for g in groups] == [[0.9, 0.8], [0.7]]

    def test_other_partitions_are_ignored(self, ensemble_service, make_detections):
        a = make_detections("A", [("img0", 1, (0, 0, 10, 10), 0.9), ("img1", 0, (0, 0, 10, 10), 0.9)])
        assert ensemble_service.group_detections([a], "img0", 0, 0.5) == []


class TestVoting:

    def test_single_model_group_with_two_models(self, ensemble_service):
        groups = [group_of(det((0, 0, 10, 10), 0.9, "yolov4"))]
        assert ensemble_service.vote(groups, VotingStrategyEnum.CONSENSUS, 2) == []
        kept = ensemble_service.vote(groups, VotingStrategyEnum.AFFIRMATIVE, 2)
        assert len(kept) == 1 and kept[0].fused is not None

    def test_majority_of_three(self, ensemble_service):
        groups = [group_of(det((0, 0, 10, 10), 0.9, "A"), det((0, 0, 10, 10), 0.8, "B"))]
        assert len(ensemble_service.vote(groups, VotingStrategyEnum.CONSENSUS, 3)) == 1
        assert ensemble_service.vote(groups, VotingStrategyEnum.UNANIMOUS, 3) == []

    def test_votes_count_models_not_boxes(self, ensemble_service):
        groups = [group_of(det((0, 0, 10, 10), 0.9, "A"), det((1, 0, 10, 10), 0.8, "A"))]
        assert ensemble_service.vote(groups, VotingStrategyEnum.CONSENSUS, 2) == []

    def test_zero_models_rejected(self, ensemble_service):
        with pytest.raises(ConfigException):
            ensemble_service.vote([], VotingStrategyEnum.AFFIRMATIVE, 0)


class TestFusion:

    def test_singleton_is_unchanged(self, ensemble_service):
        fused = ensemble_service.fuse_group(group_of(det((3, 4, 5, 6), 0.42, "A")))
        assert (fused.box, fused.score, fused.model_id) == (BoundingBox(3, 4, 5, 6), 0.42, ENSEMBLE_MODEL_ID)

    def test_equal_weights(self, ensemble_service):
        fused = ensemble_service.fuse_group(group_of(det((0, 0, 10, 10), 0.5, "A"), det((2, 0, 10, 10), 0.5, "B")))
        assert fused.box == BoundingBox(1, 0, 10, 10)
        assert fused.score == 0.5

    def test_score_weighted_average(self, ensemble_service):
        fused = ensemble_service.fuse_group(group_of(det((0, 0, 10, 10), 0.9, "A"), det((10, 0, 10, 10), 0.3, "B")))
        assert fused.box.x == pytest.approx(2.5, abs=1e-12)
        assert fused.score == pytest.approx(0.6, abs=1e-12)

    def test_zero_scores_use_equal_weights(self, ensemble_service):
        fused = ensemble_service.fuse_group(group_of(det((0, 0, 10, 10), 0.0, "A"), det((4, 0, 10, 10), 0.0, "B")))
        assert fused.box == BoundingBox(2, 0, 10, 10)
        assert fused.score == 0.0


class TestRunEnsemble:

    def test_single_model_affirmative_is_nms_output(self, ensemble_service, nms_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        yolact = make_detections("yolact", [
            ("img0", 0, (0, 0, 10, 10), 0.9),
            ("img0", 0, (1, 0, 10, 10), 0.8),
            ("img1", 2, (5, 5, 10, 10), 0.4),
        ])
        config = EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE)
        result = ensemble_service.run_ensemble([yolact], manifest, config)
        expected = nms_service.apply_to_file(yolact, config.nms).detections

        assert result.model_id == ENSEMBLE_MODEL_ID
        assert [(d.image_id, d.class_id, d.box, d.score) for d in result.detections] == \
            [(d.image_id, d.class_id, d.box, d.score) for d in expected]

    def test_single_model_overlapping_boxes_collapse_without_nms(self, ensemble_service, make_manifest, make_detections):
        # 같은 모델의 박스도 시드와 IoU >= group_iou이면 한 그룹으로 묶임
        manifest = make_manifest(IMAGES)
        solo = make_detections("solo", [
            ("img0", 0, (0, 0, 10, 10), 0.9),
            ("img0", 0, (1, 0, 10, 10), 0.8),
        ])
        config = EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE, group_iou=0.5, nms=None)
        outcome = ensemble_service.run_ensemble_detailed([solo], manifest, config)

        assert [len(g.members) for g in outcome.groups] == [2]
        [fused] = outcome.detection_file.detections
        assert fused.box.x == pytest.approx(0.8 / 1.7)
        assert fused.score == pytest.approx(0.85)

    def test_disjoint_models_under_consensus(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        a = make_detections("A", [("img0", 0, (0, 0, 5, 5), 0.9)])
        b = make_detections("B", [("img0", 0, (20, 20, 5, 5), 0.9)])
        result = ensemble_service.run_ensemble([a, b], manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.CONSENSUS))
        assert result.detections == ()

    def test_output_order(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        a = make_detections("A", [
            ("img1", 0, (0, 0, 5, 5), 0.9),
            ("img0", 1, (0, 0, 5, 5), 0.3),
            ("img0", 0, (20, 20, 5, 5), 0.7),
        ])
        result = ensemble_service.run_ensemble([a], manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE))
        assert [(d.image_id, d.score) for d in result.detections] == [("img0", 0.7), ("img0", 0.3), ("img1", 0.9)]

    def test_detailed_outcome_reports_dropped_groups(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        a = make_detections("A", [("img0", 0, (0, 0, 10, 10), 0.9), ("img0", 0, (30, 30, 5, 5), 0.5)])
        b = make_detections("B", [("img0", 0, (0, 0, 10, 10), 0.7)])
        outcome = ensemble_service.run_ensemble_detailed([a, b], manifest, EnsembleConfigDto())
        assert outcome.kept == (True, False)
        assert outcome.groups[0].fused is not None and outcome.groups[1].fused is None
        assert len(outcome.detection_file.detections) == 1

    def test_registry_mismatch(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        other = make_detections("A", [], names=["blood", "blur"])
        with pytest.raises(RegistryMismatchException):
            ensemble_service.run_ensemble([other], manifest, EnsembleConfigDto())

    def test_no_inputs(self, ensemble_service, make_manifest):
        with pytest.raises(ConfigException):
            ensemble_service.run_ensemble([], make_manifest(IMAGES), EnsembleConfigDto())

    def test_duplicate_model_ids(self, ensemble_service, make_manifest, make_detections):
        a = make_detections("A", [])
        with pytest.raises(ConfigException):
            ensemble_service.run_ensemble([a, a], make_manifest(IMAGES), EnsembleConfigDto())

    def test_group_iou_out_of_range(self):
        with pytest.raises(ConfigException):
            EnsembleConfigDto.build(group_iou=1.5)


class TestEnsembleProperties:

    SEEDS = range(1000)

    def models(self, make_detections, seed, n_models=2):
        rng = np.random.default_rng(seed)
        return [make_detections(model_id, random_records(rng)) for model_id in "ABC"[:n_models]]

    def member_sets(self, outcome):
        return {frozenset(map(key, g.members)) for g, kept in zip(outcome.groups, outcome.kept) if kept}

    def test_consensus_equals_unanimous_for_two_models(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        for seed in self.SEEDS:
            per_model = self.models(make_detections, seed)
            consensus = ensemble_service.run_ensemble(per_model, manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.CONSENSUS))
            unanimous = ensemble_service.run_ensemble(per_model, manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.UNANIMOUS))
            assert consensus == unanimous, f"seed={seed}"

    def test_consensus_groups_within_affirmative(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        for seed in self.SEEDS:
            per_model = self.models(make_detections, seed, n_models=3)
            consensus = ensemble_service.run_ensemble_detailed(per_model, manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.CONSENSUS))
            affirmative = ensemble_service.run_ensemble_detailed(per_model, manifest, EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE))
            assert self.member_sets(consensus) <= self.member_sets(affirmative), f"seed={seed}"

    def test_every_detection_in_exactly_one_group(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        config = EnsembleConfigDto(nms=None)
        for seed in self.SEEDS:
            per_model = self.models(make_detections, seed, n_models=3)
            outcome = ensemble_service.run_ensemble_detailed(per_model, manifest, config)
            grouped = Counter(key(m) for g in outcome.groups for m in g.members)
            assert grouped == Counter(key(d) for f in per_model for d in f.detections), f"seed={seed}"

    def test_fused_box_within_member_envelope(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        config = EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE, group_iou=0.3)
        for seed in self.SEEDS:
            outcome = ensemble_service.run_ensemble_detailed(self.models(make_detections, seed, 3), manifest, config)
            for group in outcome.groups:
                fused = group.fused.box.as_list()
                for c in range(4):
                    values = [m.box.as_list()[c] for m in group.members]
                    assert min(values) <= fused[c] <= max(values)
                scores = [m.score for m in group.members]
                assert min(scores) <= group.fused.score <= max(scores)

    def test_file_order_does_not_matter(self, ensemble_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        config = EnsembleConfigDto(strategy=VotingStrategyEnum.CONSENSUS)
        for seed in range(300):
            per_model = self.models(make_detections, seed, n_models=3)
            expected = ensemble_service.run_ensemble(per_model, manifest, config)
            for permutation in itertools.permutations(per_model):
                assert ensemble_service.run_ensemble(list(permutation), manifest, config) == expected

    def test_single_model_affirmative_without_nms_is_identity(self, ensemble_service, nms_service, make_manifest, make_detections):
        manifest = make_manifest(IMAGES)
        config = EnsembleConfigDto(strategy=VotingStrategyEnum.AFFIRMATIVE, group_iou=0.5, nms=None)
        for seed in self.SEEDS:
            rng = np.random.default_rng(seed)
            # 같은 모델의 박스끼리 그룹 IoU 이상 겹치지 않는 입력
            raw = make_detections("solo", random_records(rng))
            solo = nms_service.apply_to_file(raw, NmsConfigDto(iou_threshold=0.5))
            result = ensemble_service.run_ensemble([solo], manifest, config)
            assert Counter(key(d)[:4] for d in result.detections) == Counter(key(d)[:4] for d in solo.detections)


def exact_iou(a, b):
    ax, ay, aw, ah = (Fraction(v) for v in a)
    bx, by, bw, bh = (Fraction(v) for v in b)
    iw = min(ax + aw, bx + bw) - max(ax, bx)
    ih = min(ay + ah, by + bh) - max(ay, by)
    if iw <= 0 or ih <= 0:
        return Fraction(0)
    inter = iw * ih
    return inter / (aw * ah + bw * bh - inter)


def oracle_groups(per_model, strategy, group_iou):
    """
    그룹화/투표/융합을 정의대로 다시 계산합니다.
    Returns: [(멤버 목록, 통과 여부, 융합 박스 (Fraction x4), 융합 점수 (Fraction))]
    """
    partitions = defaultdict(list)
    for detection_file in per_model:
        for i, d in enumerate(detection_file.detections):
            partitions[(d.image_id, d.class_id)].append((d, i))

    n_models = len(per_model)
    threshold = Fraction(group_iou)
    expected = []
    for partition in sorted(partitions):
        ordered = [d for d, _ in sorted(partitions[partition], key=lambda item: (-item[0].score, item[0].model_id, item[1]))]
        unassigned = list(range(len(ordered)))
        while unassigned:
            seed = unassigned[0]
            chosen = [i for i in unassigned if i == seed or exact_iou(ordered[seed].box.as_list(), ordered[i].box.as_list()) >= threshold]
            unassigned = [i for i in unassigned if i not in chosen]
            members = [ordered[i] for i in chosen]

            votes = len({m.model_id for m in members})
            kept = {
                VotingStrategyEnum.AFFIRMATIVE: True,
                VotingStrategyEnum.CONSENSUS: 2 * votes > n_models,
                VotingStrategyEnum.UNANIMOUS: votes == n_models,
            }[strategy]

            scores = [Fraction(m.score) for m in members]
            weights = scores if sum(scores) > 0 else [Fraction(1)] * len(members)
            box = tuple(
                sum(w * Fraction(m.box.as_list()[c]) for w, m in zip(weights, members)) / sum(weights)
                for c in range(4)
            )
            expected.append((members, kept, box, sum(scores) / len(scores)))
    return expected


def partial_overlap_scenario(rng, model_ids="ABC"):
    """ 5장 이미지, 이미지당 1~3개 객체를 모델마다 일부만, 조금씩 어긋나게 검출 """
    records = {model_id: [] for model_id in model_ids}
    for image_id, _, _ in IMAGES:
        for _ in range(int(rng.integers(1, 4))):
            class_id = int(rng.integers(0, 2))
            x, y = (int(v) for v in rng.integers(2, 23, size=2))
            w, h = (int(v) for v in rng.integers(6, 15, size=2))
            for model_id in model_ids:
                if rng.random() < 0.75:
                    dx, dy, dw, dh = (int(v) for v in rng.integers(-2, 3, size=4))
                    score = round(float(rng.uniform(0.05, 1.0)), 2)
                    records[model_id].append((image_id, class_id, (x + dx, y + dy, w + dw, h + dh), score))
        for model_id in model_ids:
            if rng.random() < 0.3:
                x, y = (int(v) for v in rng.integers(0, 30, size=2))
                records[model_id].append((image_id, int(rng.integers(0, 2)), (x, y, 8, 8), round(float(rng.random()), 2)))
    return records


class TestEnsembleOracle:

    @pytest.mark.parametrize("strategy", list(VotingStrategyEnum))
    @pytest.mark.parametrize("group_iou", [0.3, 0.5])
    def test_matches_definition_on_partial_overlap(self, ensemble_service, make_manifest, make_detections, strategy, group_iou):
        manifest = make_manifest(IMAGES)
        config = EnsembleConfigDto(strategy=strategy, group_iou=group_iou, nms=None)
        for seed in range(1000):
            records = partial_overlap_scenario(np.random.default_rng(seed))
            per_model = [make_detections(model_id, rows) for model_id, rows in records.items()]

            outcome = ensemble_service.run_ensemble_detailed(per_model, manifest, config)
            expected = oracle_groups(per_model, strategy, group_iou)

            assert len(outcome.groups) == len(expected), f"seed={seed}"
            for group, kept, (members, expected_kept, box, score) in zip(outcome.groups, outcome.kept, expected):
                assert list(group.members) == members, f"seed={seed}"
                assert kept == expected_kept, f"seed={seed}"
                if not kept:
                    assert group.fused is None
                    continue
                assert group.fused.model_id == ENSEMBLE_MODEL_ID
                assert all(abs(a - float(b)) <= 1e-9 for a, b in zip(group.fused.box.as_list(), box)), f"seed={seed}"
                assert abs(group.fused.score - float(score)) <= 1e-9, f"seed={seed}"

            fused = [g.fused for g, kept in zip(outcome.groups, outcome.kept) if kept]
            assert Counter(map(key, outcome.detection_file.detections)) == Counter(map(key, fused))
