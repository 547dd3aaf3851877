"""
BaseJsonRepository는 직접 인스턴스화해서 사용하지 않고,
구체적인 Repository(예: ManifestRepository)가 상속받아 사용하는 기본 클래스이기 때문에,
DEPENDENCY_REGISTRY_CONFIG에 따로 등록하지 않는다.
여기에는 실제 DI 컨테이너를 통해 인스턴스를 생성할 구체적인 클래스들만 등록한다.
"""

DEPENDENCY_REGISTRY_CONFIG = {
    "manifest_repository": {
        "module": "src.repository.manifest_repository",   # 모듈 경로
        "class": "ManifestRepository",                    # 클래스명
        "dependencies": {
        },
    },
    "detection_repository": {
        "module": "src.repository.detection_repository",
        "class": "DetectionRepository",
        "dependencies": {
        },
    },
    "report_repository": {
        "module": "src.repository.report_repository",
        "class": "ReportRepository",
        "dependencies": {
        },
    },
    "dataset_service": {
        "module": "src.service.dataset.dataset_service",
        "class": "DatasetService",
        "dependencies": {
        },
    },
    "nms_service": {
        "module": "src.service.nms.nms_service",
        "class": "NmsService",
        "dependencies": {
        },
    },
    "ensemble_service": {
        "module": "src.service.ensemble.ensemble_service",
        "class": "EnsembleService",
        "dependencies": {
            "nms_service": "nms_service",                 # 의존성: 자동 등록된 nms_service provider 참조
        },
    },
    "evaluation_service": {
        "module": "src.service.evaluation.evaluation_service",
        "class": "EvaluationService",
        "dependencies": {
            "nms_service": "nms_service",
        },
    },
    "synth_service": {
        "module": "src.service.synth.synth_service",
        "class": "SynthService",
        "dependencies": {
        },
    },
    "benchmark_service": {
        "module": "src.service.benchmark.benchmark_service",
        "class": "BenchmarkService",
        "dependencies": {
            "evaluation_service": "evaluation_service",
        },
    },
}
