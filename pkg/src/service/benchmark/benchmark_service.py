from typing import Optional

from src.decorator.logged_stage import LoggedStage
from src.domain.benchmark_domain import BenchmarkRow, BenchmarkTable
from src.domain.dataset_domain import DatasetManifest
from src.domain.detection_domain import DetectionFile
from src.domain.evaluation_domain import EvalReport
from src.dto.request.evaluation_config_dto import EvaluationConfigDto
from src.exception.config_exceptions import ConfigException
from src.service.evaluation.evaluation_service import EvaluationService


class BenchmarkService:
    """
    여러 방법의 평가 결과를 임계값별 mAP 비교표로 묶는 서비스 클래스.
    """

    def __init__(self, evaluation_service: EvaluationService):
        self.evaluation_service = evaluation_service

    def table_from_reports(
        self,
        reports: list[EvalReport],
        methods: Optional[list[str]] = None,
        runs: Optional[list[Optional[str]]] = None,
    ) -> BenchmarkTable:
        """
        평가 리포트 목록으로 비교표를 만듭니다. 행 순서는 입력 순서입니다.

        Args:
            reports (list[EvalReport]): 같은 임계값으로 평가된 리포트
            methods (list[str], optional): 행 이름 (기본: 리포트의 model_id)
            runs (list[str | None], optional): 실행 라벨 (예: 데이터 증강 전략)

        Raises:
            ConfigException: 라벨 개수가 맞지 않거나 리포트 간 임계값이 다른 경우.
        """
        if not reports:
            return BenchmarkTable(thresholds=(), rows=())
        methods = self._labels(methods, len(reports), "methods") or [r.model_id for r in reports]
        runs = self._labels(runs, len(reports), "runs") or [None] * len(reports)

        thresholds = tuple(t.threshold for t in reports[0].thresholds)
        rows: list[BenchmarkRow] = []
        for report, method, run in zip(reports, methods, runs):
            if tuple(t.threshold for t in report.thresholds) != thresholds:
                raise ConfigException(f"리포트의 IoU 임계값이 서로 다릅니다: {report.model_id}")
            rows.append(BenchmarkRow(
                method  = method,
                maps    = tuple(t.map_value for t in report.thresholds),
                run     = run,
                section = "ours",
            ))
        return BenchmarkTable(thresholds=thresholds, rows=tuple(rows))

    @LoggedStage(stage="benchmark", summary=lambda table: {"rows": len(table.rows)})
    def table_from_detections(
        self,
        detection_files: list[DetectionFile],
        manifest: DatasetManifest,
        config: Optional[EvaluationConfigDto] = None,
        methods: Optional[list[str]] = None,
        runs: Optional[list[Optional[str]]] = None,
    ) -> BenchmarkTable:
        """ 검출 파일을 각각 평가한 뒤 비교표를 만듭니다. """
        reports = [self.evaluation_service.evaluate(f, manifest, config) for f in detection_files]
        return self.table_from_reports(reports, methods, runs)

    @staticmethod
    def merge_reference(
        table: BenchmarkTable,
        thresholds: tuple[float, ...],
        reference_rows: list[BenchmarkRow],
    ) -> BenchmarkTable:
        """
        발표된 참조 행을 표 앞쪽에 붙입니다.

        Raises:
            ConfigException: 참조 CSV의 임계값이 표와 다른 경우.
        """
        if table.rows and thresholds != table.thresholds:
            raise ConfigException(f"참조 표의 임계값 {thresholds}이 평가 임계값 {table.thresholds}과 다릅니다.")
        return BenchmarkTable(
            thresholds   = thresholds,
            rows         = tuple(reference_rows) + table.rows,
            config_hash  = table.config_hash,
            tool_version = table.tool_version,
        )

    @staticmethod
    def with_provenance(table: BenchmarkTable, config_hash: str, tool_version: str) -> BenchmarkTable:
        return BenchmarkTable(thresholds=table.thresholds, rows=table.rows,
                              config_hash=config_hash, tool_version=tool_version)

    @staticmethod
    def _labels(labels: Optional[list], expected: int, name: str) -> Optional[list]:
        if labels is None:
            return None
        if len(labels) != expected:
            raise ConfigException(f"{name} 개수({len(labels)})가 입력 개수({expected})와 다릅니다.")
        return list(labels)
