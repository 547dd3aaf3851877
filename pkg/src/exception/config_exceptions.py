from src.exception.base_exceptions import DetFuseException


class ConfigException(DetFuseException):
    def __init__(self, detail: str = "잘못된 설정값입니다."):
        super().__init__(detail)


class RegistryMismatchException(ConfigException):
    def __init__(self, model_id: str):
        super().__init__(f"클래스 레지스트리가 매니페스트와 일치하지 않습니다. (model_id={model_id})")
