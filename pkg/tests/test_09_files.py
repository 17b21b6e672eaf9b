import os

from .conftest import BASE_DIR, MANAGE_PATH, project_dir_content, root_dir_content

# проверяем, что все приложения проекта на месте
for app in ('roots', 'polytopes', 'verifier', 'api'):
    assert app in project_dir_content and os.path.isdir(
        os.path.join(MANAGE_PATH, app)), (
        f'Не найдено приложение `{app}` в папке {MANAGE_PATH}'
    )

# проверяем, что в приложениях нет моделей
for app in ('roots', 'polytopes', 'verifier', 'api'):
    app_dir_content = os.listdir(os.path.join(MANAGE_PATH, app))
    assert 'models.py' not in app_dir_content, (
        f'В директории `{app}` не должно быть файла с моделями. '
        'В этом приложении они не нужны.'
    )

command_path = os.path.join(
    MANAGE_PATH, 'verifier', 'management', 'commands', 'rootlab.py')
assert os.path.isfile(command_path), (
    f'Не найдена команда управления `{command_path}`'
)


# test .md
default_md = '# rootlab\n'
filename = 'README.md'
assert filename in root_dir_content, (
    f'В корне проекта не найден файл `{filename}`'
)

with open(os.path.join(BASE_DIR, filename), 'r', encoding='utf-8') as f:
    file = f.read()
    assert file != default_md, (
        f'Не забудьте оформить `{filename}`'
    )
