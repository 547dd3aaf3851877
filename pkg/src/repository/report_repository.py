import csv
import io
from decimal import InvalidOperation
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")

from matplotlib import rc_context
from matplotlib.figure import Figure

from src.domain.benchmark_domain import BenchmarkRow, BenchmarkTable
from src.domain.dataset_domain import ClassDistribution
from src.domain.evaluation_domain import EvalReport
from src.dto.response.eval_report_dto import EvalReportDto
from src.enum.io_enums import ReportFormatEnum
from src.exception.io_exceptions import IoException, ParseException
from src.mapper import report_mapper
from src.provider.number_format_provider import NumberFormatProvider
from src.repository.base_json_repository import BaseJsonRepository

# 방법별 마커 순환 (범례 순서 = 첫 등장 순서)
MARKERS = ("x", "o", "*", "s", "^", "D", "v", "P")

# SVG 출력을 실행마다 동일하게 만드는 matplotlib 설정
SVG_RC = {
    "svg.hashsalt": "detfuse",
    "svg.fonttype": "none",
    "path.simplify": False,
}

Report = Union[EvalReport, BenchmarkTable]


class ReportRepository(BaseJsonRepository[EvalReportDto]):
    """
    평가 리포트/벤치마크 표 리포지토리.

    - json: 비율 [0, 1] 전체 정밀도
    - csv : 백분율 소수 둘째 자리 (Table 형식), 헤더 필수
    - svg : 임계값별 패널 그래프
    """

    def __init__(self):
        super().__init__(EvalReportDto)

    def write_report(self, report: Report, path: str | Path, fmt: ReportFormatEnum = ReportFormatEnum.JSON):
        """
        리포트를 지정 형식으로 기록합니다. 같은 입력이면 항상 같은 바이트를 씁니다.

        Args:
            report (EvalReport | BenchmarkTable): 기록할 리포트
            path (str | Path): 출력 경로
            fmt (ReportFormatEnum): json | csv | svg

        Raises:
            IoException: 파일을 쓸 수 없는 경우.
        """
        if fmt == ReportFormatEnum.JSON:
            self.write_text(self.render_report_json(report), path)
        elif fmt == ReportFormatEnum.CSV:
            rows = self._eval_csv_rows(report) if isinstance(report, EvalReport) else self._benchmark_csv_rows(report)
            self.write_text(self.render_csv(rows), path)
        else:
            figure = self._eval_figure(report) if isinstance(report, EvalReport) else self._benchmark_figure(report)
            self._save_svg(figure, path)

    def render_report_json(self, report: Report) -> str:
        """ JSON 리포트 문자열 (파일 출력과 표준 출력이 같은 바이트를 사용) """
        if isinstance(report, EvalReport):
            dto = report_mapper.eval_report_to_dto(report)
        else:
            dto = report_mapper.benchmark_table_to_dto(report)
        return self.dumps_json(dto.model_dump(mode="json", by_alias=True))

    def load_report(self, path: str | Path) -> EvalReport:
        """
        write_report(json)로 기록한 평가 리포트를 다시 읽습니다.
        """
        return report_mapper.eval_report_dto_to_domain(self.read_dto(path))

    def write_distribution(self, distribution: ClassDistribution, path: str | Path):
        self.write_text(self.render_distribution(distribution), path)

    def load_reference_csv(self, path: str | Path) -> tuple[tuple[float, ...], list[BenchmarkRow]]:
        """
        발표된 결과(백분율)를 담은 참조 CSV를 읽습니다.
        형식은 벤치마크 CSV와 같습니다: method[,run],mAP@t1,mAP@t2,...

        Returns:
            tuple: (임계값 목록, section="reference"인 행 목록)

        Raises:
            ParseException: 헤더/행 형식 오류 (줄 번호 포함).
        """
        reader = csv.reader(io.StringIO(self.read_text(path)))
        header = next(reader, None)
        if not header or header[0] != "method":
            raise ParseException(str(path), "line 1", "헤더는 'method'로 시작해야 합니다.")

        has_run = len(header) > 1 and header[1] == "run"
        value_columns = header[2:] if has_run else header[1:]
        try:
            thresholds = tuple(float(column.removeprefix("mAP@")) for column in value_columns)
        except ValueError:
            raise ParseException(str(path), "line 1", f"임계값 열 이름이 잘못되었습니다: {value_columns}") from None
        if not thresholds:
            raise ParseException(str(path), "line 1", "mAP 열이 없습니다.")

        rows: list[BenchmarkRow] = []
        for line_no, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(header):
                raise ParseException(str(path), f"line {line_no}", f"열 개수가 헤더와 다릅니다: {len(cells)} != {len(header)}")
            values = cells[2:] if has_run else cells[1:]
            try:
                maps = tuple(NumberFormatProvider.ratio_from_percent(value) for value in values)
            except InvalidOperation:
                raise ParseException(str(path), f"line {line_no}", f"숫자가 아닌 값입니다: {values}") from None
            rows.append(BenchmarkRow(
                method  = cells[0],
                maps    = maps,
                run     = (cells[1] or None) if has_run else None,
                section = "reference",
            ))
        return thresholds, rows

    @staticmethod
    def render_csv(rows: list[list[str]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue()

    @staticmethod
    def render_distribution(distribution: ClassDistribution) -> str:
        rows = [["class", "count", "percent"]]
        for name, count in distribution.counts:
            rows.append([name, str(count), NumberFormatProvider.share(count, distribution.total)])
        rows.append(["total", str(distribution.total), "100.00" if distribution.total else "0.00"])
        return ReportRepository.render_csv(rows)

    @staticmethod
    def _benchmark_csv_rows(table: BenchmarkTable) -> list[list[str]]:
        header = ["method"] + (["run"] if table.has_runs else [])
        header += [NumberFormatProvider.threshold_label(t) for t in table.thresholds]
        rows = [header]
        for row in table.rows:
            cells = [row.method] + ([row.run or ""] if table.has_runs else [])
            cells += [NumberFormatProvider.percent(value) for value in row.maps]
            rows.append(cells)
        return rows

    @staticmethod
    def _eval_csv_rows(report: EvalReport) -> list[list[str]]:
        header = ["class", "n_gt"] + [f"AP@{t.threshold:.2f}" for t in report.thresholds]
        rows = [header]
        for i, first in enumerate(report.thresholds[0].classes):
            cells = [first.class_name, str(first.n_gt)]
            for evaluation in report.thresholds:
                ap = evaluation.classes[i].ap
                cells.append("" if ap is None else NumberFormatProvider.percent(ap))
            rows.append(cells)
        total_gt = sum(c.n_gt for c in report.thresholds[0].classes)
        rows.append(["mAP", str(total_gt)] + [NumberFormatProvider.percent(t.map_value) for t in report.thresholds])
        return rows

    @staticmethod
    def _benchmark_figure(table: BenchmarkTable) -> Figure:
        """
        임계값별 패널, x = 실행 라벨, y = mAP(%), 방법별 마커.
        """
        runs: list[str] = []
        methods: list[str] = []
        for row in table.rows:
            run = row.run or "-"
            if run not in runs:
                runs.append(run)
            if row.method not in methods:
                methods.append(row.method)

        panels = max(1, len(table.thresholds))
        figure = Figure(figsize=(4.0 * panels, 3.6))
        axes = figure.subplots(1, panels, squeeze=False)[0]
        for i, threshold in enumerate(table.thresholds):
            ax = axes[i]
            for m, method in enumerate(methods):
                points = [
                    (runs.index(row.run or "-"), row.maps[i] * 100)
                    for row in table.rows if row.method == method
                ]
                xs, ys = zip(*points)
                ax.plot(xs, ys, linestyle="none", marker=MARKERS[m % len(MARKERS)], label=method)
            ax.set_title(f"IoU {threshold:.2f}")
            ax.set_xticks(range(len(runs)))
            ax.set_xticklabels(runs, rotation=45, ha="right")
            ax.set_ylabel("mAP (%)")
            ax.set_ylim(0, 100)
        if methods:
            axes[-1].legend(loc="lower right", fontsize="small")
        figure.tight_layout()
        return figure

    @staticmethod
    def _eval_figure(report: EvalReport) -> Figure:
        """
        임계값별 패널에 정답이 있는 클래스의 PR 곡선을 그립니다.
        """
        panels = len(report.thresholds)
        figure = Figure(figsize=(4.0 * panels, 3.6))
        axes = figure.subplots(1, panels, squeeze=False)[0]
        for ax, evaluation in zip(axes, report.thresholds):
            for c in evaluation.classes:
                if c.ap is None or not c.pr_curve:
                    continue
                recall, precision = zip(*c.pr_curve)
                ax.step(recall, precision, where="post", label=c.class_name)
            ax.set_title(f"IoU {evaluation.threshold:.2f}  mAP {NumberFormatProvider.percent(evaluation.map_value)}")
            ax.set_xlabel("recall")
            ax.set_ylabel("precision")
            ax.set_xlim(0, 1)
            ax.set_ylim(0, 1.05)
        if any(c.pr_curve for c in report.thresholds[0].classes):
            axes[-1].legend(loc="lower left", fontsize="small")
        figure.tight_layout()
        return figure

    @staticmethod
    def _save_svg(figure: Figure, path: str | Path):
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with rc_context(SVG_RC):
                figure.savefig(target, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise IoException(str(path), exc.strerror or type(exc).__name__) from exc
