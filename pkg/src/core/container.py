import importlib
from dependency_injector import containers, providers
from src.config.dependency_registry_config import DEPENDENCY_REGISTRY_CONFIG
from src.core.settings import Settings
from src.logging.config.logging_config import LoggingConfig


class Container(containers.DeclarativeContainer):
    wiring_config = containers.WiringConfiguration(packages=["src.commands"])
    settings = providers.Singleton(Settings)
    logger_config = providers.Singleton(LoggingConfig, settings=settings)


def auto_register_dependencies(container_cls: type):
    """
    DEPENDENCY_REGISTRY_CONFIG에 정의된 provider들을 동적으로 컨테이너 클래스에 등록합니다.
    Args:
         container_cls: 의존성을 등록할 컨테이너 클래스
    """
    for provider_name, config in DEPENDENCY_REGISTRY_CONFIG.items():
        module = importlib.import_module(config["module"])
        cls = getattr(module, config["class"])

        # 설정에 정의된 의존성을 컨테이너의 provider로 치환
        dep_kwargs = {
            dep_param: getattr(container_cls, dep_provider_name)
            for dep_param, dep_provider_name in config.get("dependencies", {}).items()
        }

        setattr(container_cls, provider_name, providers.Factory(cls, **dep_kwargs))


# Container 클래스에 provider들을 자동 등록
auto_register_dependencies(Container)

# Container 인스턴스 생성 (wiring 및 override 시 사용)
container = Container()
