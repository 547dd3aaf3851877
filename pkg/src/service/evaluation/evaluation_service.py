import math
from collections import defaultdict
from typing import Optional

import numpy as np

from src import __version__
from src.decorator.logged_stage import LoggedStage
from src.domain.dataset_domain import DatasetManifest, GroundTruthAnnotation
from src.domain.detection_domain import Detection, DetectionFile
from src.domain.evaluation_domain import (
    ClassEvaluation,
    EvalReport,
    IouThreshold,
    MatchResult,
    MatchVerdict,
    ThresholdEvaluation,
)
from src.dto.request.evaluation_config_dto import EvaluationConfigDto
from src.enum.evaluation_enums import ApInterpolationEnum
from src.exception.config_exceptions import RegistryMismatchException
from src.exception.evaluation_exceptions import ClassSkippedException, EvalException, PartitionException
from src.exception.io_exceptions import UnknownImageException
from src.provider.hash_provider import HashProvider
from src.service.nms.nms_service import NmsService
from src.utils.geometry import iou

# COCO 방식 101점 recall 샘플
COCO_RECALL_POINTS = np.linspace(0.0, 1.0, 101)


class EvaluationService:
    """
    검출 결과를 정답과 매칭하여 클래스별 AP, 임계값별 mAP를 계산하는 서비스 클래스.
    """

    def __init__(self, nms_service: NmsService):
        """
        Args:
            nms_service (NmsService): 설정에 NMS가 지정된 경우 평가 전에 적용
        """
        self.nms_service = nms_service

    def match(
        self,
        detections: list[Detection],
        annotations: list[GroundTruthAnnotation],
        threshold: IouThreshold,
    ) -> MatchResult:
        """
        한 (image_id, class_id) 파티션에서 검출과 정답을 greedy 매칭합니다.

        검출은 점수 내림차순(동점이면 입력 인덱스 순)으로 처리하며,
        아직 매칭되지 않은 정답 중 IoU가 가장 큰 정답(동률이면 인덱스가 작은 정답)과
        IoU >= 임계값이면 TP, 아니면 FP로 판정합니다.

        Args:
            detections (list[Detection]): 파티션의 검출
            annotations (list[GroundTruthAnnotation]): 파티션의 정답
            threshold (IouThreshold): IoU 임계값

        Returns:
            MatchResult: 처리 순서대로의 검출 판정과 정답별 매칭 여부

        Raises:
            PartitionException: 서로 다른 (image_id, class_id)가 섞인 경우.
        """
        keys = {(d.image_id, d.class_id) for d in detections} | {(a.image_id, a.class_id) for a in annotations}
        if len(keys) > 1:
            raise PartitionException()

        overlaps = self._overlaps(detections, annotations)
        verdicts, matched = self._greedy_match(detections, overlaps, len(annotations), threshold.value)
        return MatchResult(verdicts=tuple(verdicts), gt_matched=tuple(matched))

    @staticmethod
    def _overlaps(detections: list[Detection], annotations: list[GroundTruthAnnotation]) -> list[list[float]]:
        return [[iou(d.box, a.box) for a in annotations] for d in detections]

    @staticmethod
    def _greedy_match(
        detections: list[Detection],
        overlaps: list[list[float]],
        n_annotations: int,
        threshold: float,
        file_indices: Optional[list[int]] = None,
    ) -> tuple[list[MatchVerdict], list[bool]]:
        matched = [False] * n_annotations
        order = sorted(range(len(detections)), key=lambda i: (-detections[i].score, i))

        verdicts: list[MatchVerdict] = []
        for i in order:
            detection = detections[i]
            index = file_indices[i] if file_indices is not None else i
            best, best_iou = -1, -1.0
            for j, value in enumerate(overlaps[i]):
                # 동률이면 인덱스가 작은 정답 유지
                if not matched[j] and value > best_iou:
                    best, best_iou = j, value
            if best >= 0 and best_iou >= threshold:
                matched[best] = True
                verdicts.append(MatchVerdict(detection_index=index, image_id=detection.image_id, score=detection.score,
                                             is_tp=True, gt_index=best, iou=best_iou))
            else:
                verdicts.append(MatchVerdict(detection_index=index, image_id=detection.image_id, score=detection.score,
                                             is_tp=False))
        return verdicts, matched

    def average_precision(
        self,
        verdicts: list[MatchVerdict],
        n_gt: int,
        interpolation: ApInterpolationEnum = ApInterpolationEnum.ALL_POINT,
    ) -> float:
        """
        한 클래스의 모든 이미지 판정으로 AP를 계산합니다.

        - all_point: Σ (r_i − r_{i−1}) · max{precision at recall ≥ r_i}
        - coco_101 : recall 0.00, 0.01, ..., 1.00에서의 보간 precision 평균

        Raises:
            ClassSkippedException: n_gt == 0 (mAP 평균에서 제외)
        """
        recall, precision, tp = self.pr_curve(verdicts, n_gt)
        if recall.size == 0:
            return 0.0

        envelope = np.maximum.accumulate(precision[::-1])[::-1]
        if interpolation == ApInterpolationEnum.COCO_101:
            positions = np.searchsorted(recall, COCO_RECALL_POINTS, side="left")
            sampled = np.where(positions < recall.size, envelope[np.minimum(positions, recall.size - 1)], 0.0)
            return float(sampled.mean())

        # recall은 TP 위치에서만 1/n_gt씩 증가
        return min(1.0, math.fsum(envelope[tp]) / n_gt)

    @staticmethod
    def pr_curve(verdicts: list[MatchVerdict], n_gt: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        판정을 (점수 내림차순, image_id, 인덱스)로 정렬해 누적 recall/precision을 계산합니다.

        Returns:
            tuple: (recall, precision, tp 마스크) 배열
        """
        if n_gt <= 0:
            raise ClassSkippedException()
        ordered = sorted(verdicts, key=lambda v: (-v.score, v.image_id, v.detection_index))
        tp = np.array([v.is_tp for v in ordered], dtype=bool)
        cum_tp = np.cumsum(tp)
        cum_fp = np.cumsum(~tp)
        recall = cum_tp / n_gt
        precision = cum_tp / np.maximum(cum_tp + cum_fp, 1)
        return recall, precision, tp

    @LoggedStage(
        stage="evaluate",
        summary=lambda report: {
            "model_id": report.model_id,
            "map": {f"{t.threshold:.2f}": round(t.map_value, 6) for t in report.thresholds},
        },
    )
    def evaluate(
        self,
        detection_file: DetectionFile,
        manifest: DatasetManifest,
        config: Optional[EvaluationConfigDto] = None,
    ) -> EvalReport:
        """
        검출 파일을 매니페스트 정답과 비교해 임계값별 클래스 AP와 mAP를 계산합니다.
        mAP는 정답이 1개 이상인 클래스 AP의 산술 평균입니다.

        Args:
            detection_file (DetectionFile): 평가 대상 검출
            manifest (DatasetManifest): 정답 매니페스트
            config (EvaluationConfigDto, optional): 임계값/보간/NMS 설정 (기본: 0.25, 0.50, 0.75 all-point)

        Returns:
            EvalReport: 결정적인 평가 리포트 (config_hash, tool_version 포함)

        Raises:
            EvalException: 정답 어노테이션이 하나도 없는 경우.
            RegistryMismatchException, UnknownImageException
        """
        config = config or EvaluationConfigDto()
        registry = manifest.registry
        if detection_file.registry.names != registry.names:
            raise RegistryMismatchException(detection_file.model_id)
        for detection in detection_file.detections:
            if not manifest.has_image(detection.image_id):
                raise UnknownImageException(detection.image_id)
        if not manifest.annotations:
            raise EvalException()

        if config.nms is not None:
            detection_file = self.nms_service.apply_to_file(detection_file, config.nms)

        det_parts: dict[tuple[str, int], list[tuple[int, Detection]]] = defaultdict(list)
        for i, detection in enumerate(detection_file.detections):
            det_parts[(detection.image_id, detection.class_id)].append((i, detection))
        gt_parts: dict[tuple[str, int], list[GroundTruthAnnotation]] = defaultdict(list)
        for annotation in manifest.annotations:
            gt_parts[(annotation.image_id, annotation.class_id)].append(annotation)

        # 파티션: (image_id, class_id) → (검출, 파일 인덱스, 정답, IoU 행렬). IoU는 임계값과 무관하므로 한 번만 계산
        partitions_by_class: dict[int, list[tuple]] = defaultdict(list)
        for key in sorted(set(det_parts) | set(gt_parts)):
            indexed = det_parts.get(key, [])
            detections = [d for _, d in indexed]
            annotations = gt_parts.get(key, [])
            partitions_by_class[key[1]].append(
                (detections, [i for i, _ in indexed], annotations, self._overlaps(detections, annotations))
            )

        thresholds = tuple(IouThreshold(value) for value in config.thresholds)
        evaluations = tuple(
            self._evaluate_threshold(threshold, registry.names, partitions_by_class, config.interpolation)
            for threshold in thresholds
        )

        return EvalReport(
            model_id      = detection_file.model_id,
            manifest_id   = HashProvider.manifest_id(manifest),
            config_hash   = HashProvider.config_hash(config.model_dump(mode="json")),
            tool_version  = __version__,
            interpolation = config.interpolation.value,
            thresholds    = evaluations,
        )

    def _evaluate_threshold(self, threshold, class_names, partitions_by_class, interpolation) -> ThresholdEvaluation:
        classes: list[ClassEvaluation] = []
        for class_id, class_name in enumerate(class_names):
            verdicts: list[MatchVerdict] = []
            n_gt = 0
            for detections, file_indices, annotations, overlaps in partitions_by_class.get(class_id, []):
                n_gt += len(annotations)
                # 판정의 detection_index는 파일 인덱스 (AP 정렬 동점 처리용)
                partition_verdicts, _ = self._greedy_match(detections, overlaps, len(annotations), threshold.value, file_indices)
                verdicts.extend(partition_verdicts)

            tp = sum(1 for v in verdicts if v.is_tp)
            try:
                ap = self.average_precision(verdicts, n_gt, interpolation)
                recall, precision, _ = self.pr_curve(verdicts, n_gt)
                curve = tuple((float(r), float(p)) for r, p in zip(recall, precision))
            except ClassSkippedException:
                ap, curve = None, ()

            classes.append(ClassEvaluation(
                class_id   = class_id,
                class_name = class_name,
                n_gt       = n_gt,
                tp         = tp,
                fp         = len(verdicts) - tp,
                ap         = ap,
                pr_curve   = curve,
            ))

        scored = [c.ap for c in classes if c.ap is not None]
        map_value = math.fsum(scored) / len(scored) if scored else 0.0
        return ThresholdEvaluation(threshold=threshold.value, map_value=map_value, classes=tuple(classes))
