from collections import Counter
from decimal import Decimal, ROUND_HALF_UP
from typing import Iterable

from src.decorator.logged_stage import LoggedStage
from src.domain.class_registry_domain import ClassRegistry
from src.domain.dataset_domain import ClassDistribution, DatasetManifest
from src.domain.detection_domain import DetectionFile
from src.exception.config_exceptions import ConfigException
from src.exception.dataset_exceptions import SplitException
from src.provider.random_provider import RandomProvider


class DatasetService:
    """
    데이터셋(매니페스트) 통계와 학습/평가 분할을 처리하는 서비스 클래스.
    """

    @LoggedStage(stage="class_distribution", summary=lambda d: {"total": d.total})
    def class_distribution(self, manifest: DatasetManifest) -> ClassDistribution:
        """
        클래스별 어노테이션 수를 레지스트리 순서로 집계합니다. 0개인 클래스도 포함합니다.

        Args:
            manifest (DatasetManifest): 검증된 매니페스트

        Returns:
            ClassDistribution: 클래스별 개수와 전체 개수 (total == 어노테이션 수)
        """
        return self._distribution(manifest.registry, (a.class_id for a in manifest.annotations))

    @LoggedStage(stage="detection_distribution", summary=lambda d: {"total": d.total})
    def detection_distribution(self, detection_file: DetectionFile) -> ClassDistribution:
        """ 검출 파일의 클래스별 검출 수 """
        return self._distribution(detection_file.registry, (d.class_id for d in detection_file.detections))

    @LoggedStage(
        stage="split",
        summary=lambda result: {"train_images": len(result[0].images), "test_images": len(result[1].images)},
    )
    def split_manifest(
        self,
        manifest: DatasetManifest,
        test_fraction: float,
        seed: int,
    ) -> tuple[DatasetManifest, DatasetManifest]:
        """
        이미지 단위로 학습/평가 매니페스트를 분할합니다.
        이미지와 그 어노테이션은 반드시 한쪽에만 속합니다.

        - 평가 이미지 수 = round(test_fraction · N) (0.5는 0에서 먼 쪽으로), [1, N-1]로 보정
        - 셔플은 PCG64(seed) 순열이므로 같은 seed면 항상 같은 분할
        - 각 쪽의 이미지/어노테이션은 원래 순서를 유지

        Raises:
            ConfigException: test_fraction이 (0, 1) 밖인 경우.
            SplitException: 이미지가 2개 미만인 경우.
        """
        if not 0.0 < test_fraction < 1.0:
            raise ConfigException(f"test_fraction은 (0, 1) 범위여야 합니다: {test_fraction}")

        n_images = len(manifest.images)
        if n_images < 2:
            raise SplitException(n_images)

        n_test = int((Decimal(repr(test_fraction)) * n_images).to_integral_value(rounding=ROUND_HALF_UP))
        n_test = min(max(n_test, 1), n_images - 1)

        permutation = RandomProvider.generator(seed).permutation(n_images)
        test_positions = set(int(i) for i in permutation[:n_test])
        test_ids = {image.image_id for i, image in enumerate(manifest.images) if i in test_positions}

        return self._subset(manifest, keep=lambda image_id: image_id not in test_ids), \
            self._subset(manifest, keep=lambda image_id: image_id in test_ids)

    @staticmethod
    def _distribution(registry: ClassRegistry, class_ids: Iterable[int]) -> ClassDistribution:
        counter = Counter(class_ids)
        counts = tuple((name, counter.get(class_id, 0)) for class_id, name in enumerate(registry.names))
        return ClassDistribution(counts=counts, total=sum(counter.values()))

    @staticmethod
    def _subset(manifest: DatasetManifest, keep) -> DatasetManifest:
        return DatasetManifest(
            images      = tuple(image for image in manifest.images if keep(image.image_id)),
            annotations = tuple(a for a in manifest.annotations if keep(a.image_id)),
            registry    = manifest.registry,
        )
