import pytest

from story2uml import PipelineConfig, default_lexicon, run_pipeline

CAR_REPAIR_STORY = (
    "A customer calls a car repair shop to make an appointment for an oil change. "
    "The receptionist checks the availability of the mechanic and schedules the "
    "appointment for the next available time slot."
)

SIMPLE_STORY = "A customer buys a product."

SIMPLE_PLANTUML = (
    "@startuml\n"
    "left to right direction\n"
    'actor "Customer" as Cu\n'
    "rectangle {\n"
    '    usecase "buy product" as UC1\n'
    "}\n"
    "Cu --> UC1\n"
    "@enduml\n"
)

TOY_DATASET = [
    ("buy product", True),
    ("place order", True),
    ("cancel order", True),
    ("repair shop", False),
    ("time slot", False),
    ("oil change", False),
]


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def no_filter_config():
    return PipelineConfig(filter_enabled=False)


@pytest.fixture(scope="session")
def car_repair_result(no_filter_config):
    return run_pipeline(CAR_REPAIR_STORY, no_filter_config)


@pytest.fixture(scope="session")
def car_repair_model(car_repair_result):
    return car_repair_result.filtered_model
