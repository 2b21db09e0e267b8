from cesembed.app.cli import main

raise SystemExit(main())
