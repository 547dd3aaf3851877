from collections import defaultdict

import numpy as np

from src.decorator.logged_stage import LoggedStage
from src.domain.bounding_box_domain import BoundingBox
from src.domain.dataset_domain import DatasetManifest
from src.domain.detection_domain import ENSEMBLE_MODEL_ID, Detection, DetectionFile
from src.domain.fused_group_domain import EnsembleOutcome, FusedGroup
from src.dto.request.ensemble_config_dto import EnsembleConfigDto
from src.enum.ensemble_enums import VotingStrategyEnum
from src.exception.config_exceptions import ConfigException, RegistryMismatchException
from src.service.nms.nms_service import NmsService
from src.utils.geometry import boxes_to_array, iou_matrix

# 그룹 풀의 원소: (검출, 파일 내 인덱스)
PooledDetection = tuple[Detection, int]


class EnsembleService:
    """
    여러 검출기의 예측을 투표(affirmative / consensus / unanimous)로 결합하는 서비스 클래스.

    파이프라인: 모델별 NMS → (image, class) 파티션별 그룹화 → 투표 → 박스 융합
    """

    def __init__(self, nms_service: NmsService):
        """
        Args:
            nms_service (NmsService): 투표 전 모델별 NMS에 사용
        """
        self.nms_service = nms_service

    def group_detections(
        self,
        per_model: list[DetectionFile],
        image_id: str,
        class_id: int,
        group_iou: float,
    ) -> list[FusedGroup]:
        """
        한 (image_id, class_id) 파티션의 검출을 모델 구분 없이 모아 greedy 그룹화합니다.

        정렬 기준은 (점수 내림차순, model_id, 파일 내 인덱스)이며,
        미배정 검출 중 최고점을 시드로 삼아 시드와의 IoU가 group_iou 이상인 미배정 검출을 흡수합니다.
        모든 검출은 정확히 하나의 그룹에 속합니다.

        Returns:
            list[FusedGroup]: 투표 전 그룹 (fused 미설정)
        """
        pool = [
            (d, i)
            for f in per_model
            for i, d in enumerate(f.detections)
            if d.image_id == image_id and d.class_id == class_id
        ]
        return self._group_pool(pool, group_iou)

    def vote(self, groups: list[FusedGroup], strategy: VotingStrategyEnum, n_models: int) -> list[FusedGroup]:
        """
        지지 모델 수(서로 다른 model_id 수)로 그룹을 걸러내고, 통과한 그룹의 융합 검출을 계산합니다.

        - affirmative: 모든 그룹
        - consensus  : 지지 모델 수 > n_models / 2
        - unanimous  : 지지 모델 수 == n_models

        Raises:
            ConfigException: n_models < 1
        """
        if n_models < 1:
            raise ConfigException(f"n_models는 1 이상이어야 합니다: {n_models}")
        return [
            FusedGroup(members=group.members, fused=self.fuse_group(group))
            for group in groups
            if self.passes(group, strategy, n_models)
        ]

    @staticmethod
    def passes(group: FusedGroup, strategy: VotingStrategyEnum, n_models: int) -> bool:
        votes = len(group.supporting_models)
        if strategy == VotingStrategyEnum.AFFIRMATIVE:
            return True
        if strategy == VotingStrategyEnum.CONSENSUS:
            return 2 * votes > n_models
        return votes == n_models

    @staticmethod
    def fuse_group(group: FusedGroup) -> Detection:
        """
        그룹 멤버를 하나의 검출로 융합합니다.

        - 박스: 점수 가중 평균 (가중치 score_i / Σscore, 점수 합이 0이면 균등), 멤버 좌표 범위로 제한
        - 점수: 멤버 점수의 산술 평균
        - model_id: "ensemble"
        """
        first = group.members[0]
        if len(group.members) == 1:
            return Detection(image_id=first.image_id, class_id=first.class_id, box=first.box,
                             score=first.score, model_id=ENSEMBLE_MODEL_ID)

        boxes = boxes_to_array([m.box for m in group.members])
        scores = np.array([m.score for m in group.members], dtype=np.float64)
        weights = scores if scores.sum() > 0 else None
        coords = np.clip(np.average(boxes, axis=0, weights=weights), boxes.min(axis=0), boxes.max(axis=0))
        score = float(np.clip(scores.mean(), scores.min(), scores.max()))

        x, y, w, h = (float(v) for v in coords)
        return Detection(
            image_id = first.image_id,
            class_id = first.class_id,
            box      = BoundingBox(x=x, y=y, w=w, h=h),
            score    = score,
            model_id = ENSEMBLE_MODEL_ID,
        )

    def run_ensemble(self, per_model: list[DetectionFile], manifest: DatasetManifest,
                     config: EnsembleConfigDto) -> DetectionFile:
        """
        앙상블 전체 파이프라인을 실행하고 model_id="ensemble"인 검출 파일을 반환합니다.
        출력은 (image_id, 점수 내림차순, class_id, 박스) 순으로 정렬됩니다.
        """
        return self.run_ensemble_detailed(per_model, manifest, config).detection_file

    @LoggedStage(
        stage="ensemble",
        summary=lambda outcome: {
            "groups": len(outcome.groups),
            "kept": sum(outcome.kept),
            "detections": len(outcome.detection_file.detections),
        },
    )
    def run_ensemble_detailed(self, per_model: list[DetectionFile], manifest: DatasetManifest,
                              config: EnsembleConfigDto) -> EnsembleOutcome:
        """
        run_ensemble과 같지만 투표 전 그룹과 통과 여부까지 반환합니다.

        Raises:
            ConfigException: 입력 파일이 없거나 model_id가 중복된 경우.
            RegistryMismatchException: 파일 레지스트리가 매니페스트와 다른 경우.
        """
        if not per_model:
            raise ConfigException("앙상블할 검출 파일이 1개 이상 필요합니다.")
        model_ids = [f.model_id for f in per_model]
        if len(set(model_ids)) != len(model_ids):
            raise ConfigException(f"model_id가 중복되었습니다: {model_ids}")
        for detection_file in per_model:
            if detection_file.registry.names != manifest.registry.names:
                raise RegistryMismatchException(detection_file.model_id)

        if config.nms is not None:
            per_model = [self.nms_service.apply_to_file(f, config.nms) for f in per_model]

        partitions: dict[tuple[str, int], list[PooledDetection]] = defaultdict(list)
        for detection_file in per_model:
            for i, d in enumerate(detection_file.detections):
                partitions[(d.image_id, d.class_id)].append((d, i))

        n_models = len(per_model)
        groups: list[FusedGroup] = []
        kept: list[bool] = []
        fused: list[Detection] = []
        for key in sorted(partitions):
            for group in self._group_pool(partitions[key], config.group_iou):
                if self.passes(group, config.strategy, n_models):
                    group = FusedGroup(members=group.members, fused=self.fuse_group(group))
                    fused.append(group.fused)
                    kept.append(True)
                else:
                    kept.append(False)
                groups.append(group)

        fused.sort(key=lambda d: (d.image_id, -d.score, d.class_id, d.box.x, d.box.y, d.box.w, d.box.h))
        return EnsembleOutcome(
            detection_file = DetectionFile(model_id=ENSEMBLE_MODEL_ID, detections=tuple(fused), registry=manifest.registry),
            groups         = tuple(groups),
            kept           = tuple(kept),
        )

    @staticmethod
    def _group_pool(pool: list[PooledDetection], group_iou: float) -> list[FusedGroup]:
        if not pool:
            return []
        ordered = sorted(pool, key=lambda item: (-item[0].score, item[0].model_id, item[1]))
        boxes = boxes_to_array([d.box for d, _ in ordered])
        overlaps = iou_matrix(boxes, boxes)

        assigned = np.zeros(len(ordered), dtype=bool)
        groups: list[FusedGroup] = []
        for seed in range(len(ordered)):
            if assigned[seed]:
                continue
            absorbed = np.flatnonzero(~assigned & (overlaps[seed] >= group_iou))
            absorbed = absorbed[absorbed != seed]
            assigned[seed] = True
            assigned[absorbed] = True
            members = [ordered[seed][0]] + [ordered[i][0] for i in absorbed]
            groups.append(FusedGroup(members=tuple(members)))
        return groups
