from transdist.cli.main import main

raise SystemExit(main())
