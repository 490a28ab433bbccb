#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
kummer_verify - Kummer 曲面自同构的精确验证工具
主入口文件
支持按套件运行验证、导入并校验外部 Keum 作用数据、输出 JSON 报告
"""

import os
import sys
import argparse
import logging

# 添加项目根目录到Python路径
base_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, base_dir)

from core.config import (
    ConfigManager, RunConfig, SUITES, SWEEPS, FACE_METHODS, LOG_LEVELS,
    deep_merge, env_overrides, get_resource_path, load_settings_with_override,
)
from core.isometry_group import KeumDataError, load_keum_actions
from core.monitor import RunMonitor
from core.report import (
    EXIT_ERROR, CheckResult, Report, Status, SuiteReport, write_report,
)
from core.utils import format_duration, Stopwatch
from suites import get_suite_handler, list_available_suites, resolve_suites

logger = logging.getLogger('kummer_verify')

# 报告摘要只依赖这些运行参数（以及 Keum 摘要）
REPORT_KEYS = ('suite', 'samples', 'seed', 'symbolic', 'sweep', 'face_method',
               'homing_words', 'homing_max_length', 'random_checks')


def parse_arguments(argv=None):
    """解析命令行参数"""
    common = argparse.ArgumentParser(add_help=False)

    run_group = common.add_argument_group('运行参数')
    run_group.add_argument('--samples', type=int, help='Cremona 随机特化组数 (默认: 5)')
    run_group.add_argument('--seed', type=int, help='随机种子 (默认: 7)')
    run_group.add_argument('--symbolic', action='store_true', default=None,
                           help='Cremona 套件在符号参数 (a,b,c) 上运行')
    run_group.add_argument('--keum-file', help='Keum 作用数据文件 (JSON)')
    run_group.add_argument('--sweep', choices=SWEEPS, help='面维数扫描范围 (默认: representatives)')
    run_group.add_argument('--face-method', choices=FACE_METHODS, help='面维数算法 (默认: dual)')
    run_group.add_argument('--workers', type=int, help='并行线程数')
    run_group.add_argument('--no-parallel', action='store_true', help='串行执行')
    run_group.add_argument('-o', '--output', help='报告文件路径 (默认: report.json)')

    log_group = common.add_argument_group('日志配置')
    log_group.add_argument('--verbose', '-v', action='count', default=0, help='详细输出')
    log_group.add_argument('--quiet', '-q', action='store_true', help='静默模式')
    log_group.add_argument('--log-file', help='日志文件路径')

    config_group = common.add_argument_group('配置文件')
    config_group.add_argument('--settings', '--default-config', dest='settings',
                              help='默认配置文件路径 (settings.json)')
    config_group.add_argument('--config', help='覆盖配置文件路径 (JSON格式，会覆盖默认配置)')

    parser = argparse.ArgumentParser(
        description='kummer_verify - Kummer 曲面自同构与基本区域的精确验证',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
        epilog='''
示例:
  # 全部套件
  python main.py verify all

  # 组态计数
  python main.py verify config

  # Cremona 套件：5 组随机特化
  python main.py verify cremona --samples 5 --seed 7

  # 符号参数（较慢）
  python main.py verify cremona --symbolic

  # 基本区域：全部墙扫描，附带 Keum 数据
  python main.py verify chamber --sweep full --keum-file keum.json

  # 导入并校验 Keum 数据
  python main.py import-keum keum.json -o keum_report.json

  # 列出套件
  python main.py list
        '''
    )

    subparsers = parser.add_subparsers(dest='command')

    verify = subparsers.add_parser('verify', parents=[common], help='运行验证套件')
    verify.add_argument('suite', choices=SUITES, help='套件名')

    keum = subparsers.add_parser('import-keum', parents=[common], help='导入并校验 Keum 作用数据')
    keum.add_argument('file', help='Keum 数据文件')

    subparsers.add_parser('list', parents=[common], help='列出可用套件')

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        parser.exit(EXIT_ERROR)
    return args


def build_config_from_args(args) -> dict:
    """从命令行参数构建配置"""
    cmd_config = {}

    if getattr(args, 'suite', None):
        cmd_config['suite'] = args.suite

    for arg_name in ('samples', 'seed', 'sweep', 'face_method', 'output', 'log_file'):
        arg_value = getattr(args, arg_name, None)
        if arg_value is not None:
            cmd_config[arg_name] = arg_value

    if args.keum_file:
        cmd_config['keum_file'] = args.keum_file
    if args.symbolic:
        cmd_config['symbolic'] = True

    parallel = {}
    if args.no_parallel:
        parallel['enabled'] = False
    if args.workers:
        parallel['max_workers'] = args.workers
    if parallel:
        cmd_config['parallel'] = parallel

    if args.quiet:
        cmd_config['log_level'] = 'WARNING'
    elif args.verbose:
        cmd_config['log_level'] = 'DEBUG'

    return cmd_config


def load_configuration(args) -> ConfigManager:
    """加载配置（优先级从低到高：默认配置 -> 覆盖配置 -> 环境变量 -> 命令行参数）

    Raises:
        ValueError: 配置文件缺失、格式错误或取值非法
    """
    settings_path = args.settings or get_resource_path('settings.json')

    print(f"[配置加载]")
    print(f"  默认配置: {settings_path}")

    # 1-2. 默认配置 (settings.json) 与覆盖配置文件
    config = load_settings_with_override(settings_path, args.config)
    print(f"  默认配置加载: {'成功' if os.path.exists(settings_path) else '使用内联默认'}")
    print(f"  覆盖配置: {args.config or '未指定'}")

    # 3. 环境变量
    env_config = env_overrides()
    if env_config:
        print(f"  环境变量: {', '.join(sorted(env_config))}")
        config = deep_merge(config, env_config)

    # 4. 命令行参数（最高优先级）
    config = deep_merge(config, build_config_from_args(args))

    manager = ConfigManager(config, settings_path=settings_path)
    print(f"  最终配置: {len(manager.config)} 个顶层配置项")
    return manager


def setup_logging(level: str, log_file: str = None):
    """配置根日志器"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level if level in LOG_LEVELS else 'INFO'),
        format='%(asctime)s [%(levelname)s] %(name)s: %(message)s',
        handlers=handlers,
        force=True,
    )


def load_keum_table(path: str, random_checks: int):
    """读取 Keum 数据

    Raises:
        KeumDataError: 文件缺失、为空或格式错误
    """
    if not path:
        return None
    if not os.path.exists(path):
        raise KeumDataError(f"Keum 数据文件不存在: {path}")
    table = load_keum_actions(path, validate=True, random_checks=random_checks)
    print(f"  Keum 数据: {len(table.entries)} 条, sha256={table.source_digest[:16]}..., "
          f"{'通过' if table.accepted else '未通过'}校验")
    return table


def run(config: RunConfig, keum_table=None) -> Report:
    """执行所选套件，返回报告"""
    monitor = RunMonitor()
    run_key = {k: v for k, v in config.to_dict().items() if k in REPORT_KEYS}
    report = Report(run=run_key,
                    keum_digest=keum_table.source_digest if keum_table is not None else None)

    for name in resolve_suites(config.suite):
        handler = get_suite_handler(name)
        logger.info(f"运行套件 {name} ({handler.title})")
        monitor.begin(name)
        suite_report = handler(config, keum_table).run()
        suite_report.stats = monitor.end(name)
        report.suites.append(suite_report)
        counts = suite_report.counts()
        print(f"  {'✓' if suite_report.passed else '✗'} {name}: "
              f"{counts['PASS']} PASS, {counts['FAIL']} FAIL, {counts['SKIPPED']} SKIPPED "
              f"({format_duration(suite_report.stats.get('wall_seconds', 0))})")

    report.environment = monitor.summary()
    return report


def import_keum(file_path: str, random_checks: int = 100) -> Report:
    """校验外部 Keum 作用表，每个六元组一条断言

    Raises:
        KeumDataError: 文件缺失、为空或格式错误
    """
    if not os.path.exists(file_path):
        raise KeumDataError(f"Keum 数据文件不存在: {file_path}")
    watch = Stopwatch()
    table = load_keum_actions(file_path, validate=True, random_checks=random_checks)

    suite = SuiteReport('keum')
    suite.add(CheckResult("entry_count", Status.PASS if len(table.entries) == 120 else Status.FAIL,
                          "第一类 Weber 六元组共 120 个，每个对应一个 z_w",
                          {"entries": len(table.entries)}))
    for v in table.validations:
        suite.add(CheckResult(f"z_w{v.hexad}", Status.PASS if v.passed else Status.FAIL,
                              "z_w 保持形式与整格，固定 T_0 与 c，z_w(w″)=w″+2r_w，z_w(r_w')=−r_w",
                              v.to_dict(), "; ".join(v.failures)))
    suite.stats = {"wall_seconds": round(watch.elapsed(), 3)}

    report = Report(run={"command": "import-keum", "file": os.path.basename(file_path),
                         "random_checks": random_checks},
                    keum_digest=table.source_digest)
    report.suites.append(suite)
    return report


def main(argv=None) -> int:
    """主入口函数，返回退出码"""
    args = parse_arguments(argv)

    if args.command == 'list':
        for item in list_available_suites():
            print(f"  {item['type']:<10} {item['name']} - {item['description']}")
        return 0

    try:
        manager = load_configuration(args)
    except ValueError as e:
        print(f"配置错误: {e}", file=sys.stderr)
        return EXIT_ERROR

    config = RunConfig.from_config(manager)
    setup_logging(manager.get('log_level', 'INFO'), manager.get('log_file'))

    try:
        if args.command == 'import-keum':
            print(f"\n[导入 Keum 数据] {args.file}")
            report = import_keum(args.file, max(manager.get('random_checks', 100), 1))
        else:
            print(f"\n[验证] 套件: {config.suite}, seed={config.seed}, samples={config.samples}"
                  f"{', symbolic' if config.symbolic else ''}")
            keum_table = load_keum_table(config.keum_file, config.random_checks)
            report = run(config, keum_table)
        write_report(report, config.output)
    except KeumDataError as e:
        print(f"数据错误: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"文件错误: {e}", file=sys.stderr)
        return EXIT_ERROR

    totals = report.totals()
    print()
    print("=" * 60)
    print(f"  结果: {'PASS' if report.passed else 'FAIL'}  "
          f"({totals['PASS']} PASS, {totals['FAIL']} FAIL, {totals['SKIPPED']} SKIPPED)")
    if report.keum_digest:
        print(f"  Keum sha256: {report.keum_digest}")
    print(f"  报告: {os.path.abspath(config.output)}")
    print(f"  摘要: {report.digest()}")
    print("=" * 60)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
