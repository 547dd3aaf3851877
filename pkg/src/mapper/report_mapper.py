from src.domain.benchmark_domain import BenchmarkTable
from src.domain.evaluation_domain import ClassEvaluation, EvalReport, ThresholdEvaluation
from src.dto.response.benchmark_table_dto import BenchmarkRowDto, BenchmarkTableDto
from src.dto.response.eval_report_dto import ClassEvaluationDto, EvalReportDto, ThresholdEvaluationDto


def eval_report_to_dto(report: EvalReport) -> EvalReportDto:
    """
    (도메인 객체 → 응답 DTO 변환)
    JSON 리포트는 mAP/AP를 [0, 1] 비율 그대로(전체 정밀도) 기록합니다.
    """
    return EvalReportDto(
        model_id      = report.model_id,
        manifest_id   = report.manifest_id,
        config_hash   = report.config_hash,
        tool_version  = report.tool_version,
        interpolation = report.interpolation,
        thresholds    = [
            ThresholdEvaluationDto(
                iou       = evaluation.threshold,
                map_value = evaluation.map_value,
                tp        = evaluation.tp,
                fp        = evaluation.fp,
                classes   = [
                    ClassEvaluationDto(
                        class_id   = c.class_id,
                        class_name = c.class_name,
                        n_gt       = c.n_gt,
                        tp         = c.tp,
                        fp         = c.fp,
                        ap         = c.ap,
                        pr_curve   = [list(point) for point in c.pr_curve],
                    )
                    for c in evaluation.classes
                ],
            )
            for evaluation in report.thresholds
        ],
    )


def eval_report_dto_to_domain(report_dto: EvalReportDto) -> EvalReport:
    return EvalReport(
        model_id      = report_dto.model_id,
        manifest_id   = report_dto.manifest_id,
        config_hash   = report_dto.config_hash,
        tool_version  = report_dto.tool_version,
        interpolation = report_dto.interpolation,
        thresholds    = tuple(
            ThresholdEvaluation(
                threshold = t.iou,
                map_value = t.map_value,
                classes   = tuple(
                    ClassEvaluation(
                        class_id   = c.class_id,
                        class_name = c.class_name,
                        n_gt       = c.n_gt,
                        tp         = c.tp,
                        fp         = c.fp,
                        ap         = c.ap,
                        pr_curve   = tuple((point[0], point[1]) for point in c.pr_curve),
                    )
                    for c in t.classes
                ),
            )
            for t in report_dto.thresholds
        ),
    )


def benchmark_table_to_dto(table: BenchmarkTable) -> BenchmarkTableDto:
    return BenchmarkTableDto(
        thresholds        = list(table.thresholds),
        rows              = [
            BenchmarkRowDto(method=row.method, run=row.run, section=row.section, maps=list(row.maps))
            for row in table.rows
        ],
        best_by_threshold = {f"{threshold:.2f}": method for threshold, method in table.best_by_threshold().items()},
        config_hash       = table.config_hash,
        tool_version      = table.tool_version,
    )
