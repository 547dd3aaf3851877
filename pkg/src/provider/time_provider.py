import time
from datetime import datetime, timezone

class TimeProvider:
    """
    시간 관련 기능을 제공하는 유틸리티 클래스
    """

    @staticmethod
    def get_utc_now() -> datetime:
        """ 현재 UTC 시간을 반환 (timezone-aware datetime) """
        return datetime.now(timezone.utc)

    @staticmethod
    def get_utc_now_str() -> str:
        """ 현재 UTC 시간을 문자열로 반환 (형식: YYYY-MM-DD HH:MM:SS) """
        return TimeProvider.get_utc_now().strftime("%Y-%m-%d %H:%M:%S")

    @staticmethod
    def start_timer() -> float:
        """ 경과 시간 측정용 단조 시계 값 """
        return time.perf_counter()

    @staticmethod
    def elapsed_ms(start: float) -> float:
        """ start_timer() 이후 경과 시간 (밀리초, 소수 둘째 자리) """
        return round((time.perf_counter() - start) * 1000, 2)
