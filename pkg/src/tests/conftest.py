import json
from pathlib import Path

import pytest

from src.core.container import container
from src.domain.bounding_box_domain import BoundingBox
from src.domain.class_registry_domain import ClassRegistry
from src.domain.dataset_domain import DatasetManifest, GroundTruthAnnotation, ImageInfo
from src.domain.detection_domain import Detection, DetectionFile

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def registry() -> ClassRegistry:
    return ClassRegistry.default()


@pytest.fixture
def make_manifest(registry):
    """
    (이미지 목록, 어노테이션 목록)으로 DatasetManifest를 만드는 팩토리.
    images: [(image_id, width, height)], annotations: [(image_id, class_id, (x, y, w, h))]
    """
    def factory(images, annotations=(), names=None):
        return DatasetManifest(
            images      = tuple(ImageInfo(image_id=i, width=w, height=h) for i, w, h in images),
            annotations = tuple(
                GroundTruthAnnotation(image_id=i, class_id=c, box=BoundingBox(*box)) for i, c, box in annotations
            ),
            registry    = ClassRegistry(names=tuple(names)) if names else registry,
        )
    return factory


@pytest.fixture
def make_detections(registry):
    """
    records: [(image_id, class_id, (x, y, w, h), score)]
    """
    def factory(model_id, records, names=None):
        return DetectionFile(
            model_id   = model_id,
            detections = tuple(
                Detection(image_id=i, class_id=c, box=BoundingBox(*box), score=s, model_id=model_id)
                for i, c, box, s in records
            ),
            registry   = ClassRegistry(names=tuple(names)) if names else registry,
        )
    return factory


@pytest.fixture
def write_json(tmp_path):
    def factory(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path
    return factory


@pytest.fixture
def nms_service():
    return container.nms_service()


@pytest.fixture
def ensemble_service():
    return container.ensemble_service()


@pytest.fixture
def evaluation_service():
    return container.evaluation_service()


@pytest.fixture
def synth_service():
    return container.synth_service()


@pytest.fixture
def dataset_service():
    return container.dataset_service()


@pytest.fixture
def benchmark_service():
    return container.benchmark_service()


@pytest.fixture
def manifest_repository():
    return container.manifest_repository()


@pytest.fixture
def detection_repository():
    return container.detection_repository()


@pytest.fixture
def report_repository():
    return container.report_repository()
