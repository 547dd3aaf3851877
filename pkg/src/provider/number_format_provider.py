from decimal import Decimal, ROUND_HALF_UP

_CENT = Decimal("0.01")


class NumberFormatProvider:
    """
    표/CSV 출력용 숫자 렌더링 유틸리티 클래스.
    이진 부동소수 오차 없이 십진 반올림하도록 Decimal을 사용합니다.
    """

    @staticmethod
    def percent(ratio: float) -> str:
        """
        [0, 1] 비율을 백분율 소수 둘째 자리 문자열로 변환합니다.
        예: 0.7550 → "75.50", 0.598 → "59.80"
        """
        return str((Decimal(repr(ratio)) * 100).quantize(_CENT, rounding=ROUND_HALF_UP))

    @staticmethod
    def ratio_from_percent(text: str) -> float:
        """ 백분율 문자열("85.44")을 [0, 1] 비율로 변환합니다. """
        return float(Decimal(text.strip()) / 100)

    @staticmethod
    def threshold_label(threshold: float) -> str:
        """ 임계값 열 이름 (예: 0.5 → "mAP@0.50") """
        return f"mAP@{threshold:.2f}"

    @staticmethod
    def share(count: int, total: int) -> str:
        """ 전체 대비 비중 (백분율, 소수 둘째 자리). total이 0이면 "0.00" """
        if total == 0:
            return "0.00"
        return str((Decimal(count) * 100 / Decimal(total)).quantize(_CENT, rounding=ROUND_HALF_UP))
