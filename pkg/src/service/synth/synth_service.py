import math
from collections import defaultdict

import numpy as np

from src.decorator.logged_stage import LoggedStage
from src.domain.bounding_box_domain import BoundingBox
from src.domain.dataset_domain import DatasetManifest, GroundTruthAnnotation, ImageInfo
from src.domain.detection_domain import Detection, DetectionFile
from src.dto.request.perturb_config_dto import PerturbConfigDto
from src.provider.random_provider import RandomProvider

# 오검출 박스 크기 범위 (이미지 크기 대비)
FP_SIZE_RANGE = (0.05, 0.3)


class SynthService:
    """
    정답을 교란해 가상의 모델 출력을 만드는 시드 기반 합성 검출 생성 서비스.
    학습된 검출기 없이 앙상블/평가 동작을 재현하기 위해 사용합니다.
    """

    @LoggedStage(
        stage="generate",
        summary=lambda f: {"model_id": f.model_id, "detections": len(f.detections)},
    )
    def generate(self, manifest: DatasetManifest, config: PerturbConfigDto, model_id: str) -> DetectionFile:
        """
        이미지마다 (seed, 이미지 순번)으로 분기한 난수 스트림을 사용해 검출을 생성합니다.

        - 정답마다 (1 − drop_rate) 확률로 검출 생성
          박스 좌표 = 정답 + U(−1, 1) · jitter · (w, h, w, h), 필요할 때만 이미지 경계로 보정
          점수 = base_score · exp(−decay · 실제 상대 지터 평균)
        - 이미지마다 Poisson(fp_rate)개의 오검출 (임의 클래스, 점수 U(0, fp_score_max))

        같은 (manifest, config)이면 항상 같은 결과를 반환합니다.
        """
        by_image: dict[str, list[GroundTruthAnnotation]] = defaultdict(list)
        for annotation in manifest.annotations:
            by_image[annotation.image_id].append(annotation)

        detections: list[Detection] = []
        for image_index, image in enumerate(manifest.images):
            rng = RandomProvider.image_stream(config.seed, image_index)
            for annotation in by_image.get(image.image_id, []):
                drop_draw = rng.random()
                noise = rng.uniform(-1.0, 1.0, size=4)
                if drop_draw < config.drop_rate:
                    continue
                box, relative = self._jitter(annotation.box, image, noise, config.jitter)
                score = config.score_model.base_score * math.exp(-config.score_model.decay * relative)
                detections.append(Detection(
                    image_id = image.image_id,
                    class_id = annotation.class_id,
                    box      = box,
                    score    = min(1.0, max(0.0, score)),
                    model_id = model_id,
                ))

            n_fp = int(rng.poisson(config.fp_rate))
            for _ in range(n_fp):
                detections.append(self._false_positive(rng, image, len(manifest.registry), config, model_id))

        return DetectionFile(model_id=model_id, detections=tuple(detections), registry=manifest.registry)

    @staticmethod
    def _jitter(box: BoundingBox, image: ImageInfo, noise: np.ndarray, jitter: float) -> tuple[BoundingBox, float]:
        """
        박스를 교란하고 (새 박스, 실제 상대 이동량 평균)을 반환합니다.
        지터가 0이면 원래 박스를 그대로 돌려줍니다.
        """
        if jitter == 0:
            return box, 0.0

        x = box.x + noise[0] * jitter * box.w
        y = box.y + noise[1] * jitter * box.h
        # 최소 크기: min(1px, 원래 크기)
        w = min(max(box.w + noise[2] * jitter * box.w, min(1.0, box.w)), image.width)
        h = min(max(box.h + noise[3] * jitter * box.h, min(1.0, box.h)), image.height)
        # 경계를 벗어날 때만 이동
        if x < 0 or x + w > image.width:
            x = min(max(x, 0.0), image.width - w)
        if y < 0 or y + h > image.height:
            y = min(max(y, 0.0), image.height - h)

        moved = BoundingBox(x=float(x), y=float(y), w=float(w), h=float(h))
        relative = (
            abs(moved.x - box.x) / box.w + abs(moved.y - box.y) / box.h
            + abs(moved.w - box.w) / box.w + abs(moved.h - box.h) / box.h
        ) / 4
        return moved, relative

    @staticmethod
    def _false_positive(rng: np.random.Generator, image: ImageInfo, n_classes: int,
                        config: PerturbConfigDto, model_id: str) -> Detection:
        class_id = int(rng.integers(n_classes))
        w = float(rng.uniform(*FP_SIZE_RANGE)) * image.width
        h = float(rng.uniform(*FP_SIZE_RANGE)) * image.height
        x = float(rng.uniform(0.0, image.width - w))
        y = float(rng.uniform(0.0, image.height - h))
        score = float(rng.uniform(0.0, config.score_model.fp_score_max))
        return Detection(
            image_id = image.image_id,
            class_id = class_id,
            box      = BoundingBox(x=x, y=y, w=w, h=h),
            score    = score,
            model_id = model_id,
        )
